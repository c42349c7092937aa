#!/usr/bin/env python3
"""Regenerate the C_15 doubling seed by exhaustive search.

The search fixes code(u_1) = {1} and requires color 1 on (u_2, u_3); the
first witness found is checked and written in the seed JSON format.
"""

import argparse
import logging
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from union_coloring import BudgetExceededError, find_seed_coloring, save_seed
from union_coloring.io import to_dot


def parse_args():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Search for a doubling seed coloring of C_(2^k - 1)"
    )
    parser.add_argument(
        "--k",
        type=int,
        default=4,
        help="Palette size; the cycle has 2^k - 1 vertices (default: 4)"
    )
    parser.add_argument(
        "--output",
        default="c15_seed.json",
        help="Output JSON file or directory (default: c15_seed.json)"
    )
    parser.add_argument(
        "--budget",
        type=int,
        help="Node limit for the search"
    )
    parser.add_argument(
        "--dot",
        help="Also write the seed as DOT to this file"
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Log search progress"
    )
    return parser.parse_args()


def main():
    args = parse_args()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    n = (1 << args.k) - 1
    print(f"Searching for a seed coloring of C_{n} with {args.k} colors...")
    try:
        seed = find_seed_coloring(n, args.k, node_limit=args.budget)
    except BudgetExceededError as e:
        print(f"Error: {e.message} ({e.nodes} nodes)")
        return 4

    if seed is None:
        print(f"No seed coloring of C_{n} exists with {args.k} colors")
        return 1

    path = save_seed(seed, args.output)
    print(f"Seed saved to {path}")
    if args.dot:
        Path(args.dot).write_text(to_dot(seed.graph, seed.coloring, name=f"C{n}"), encoding="utf-8")
        print(f"DOT saved to {args.dot}")
    return 0


if __name__ == "__main__":
    exit(main())
