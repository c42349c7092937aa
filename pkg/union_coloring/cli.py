#!/usr/bin/env python3
"""Command-line front end.

Subcommands: generate, color, verify, chi, bound, export. Results go to
stdout (or ``--out``), diagnostics to stderr.

Exit codes: 0 success, 1 invalid coloring, 2 I/O, parse or parameter
error, 3 inadmissible graph, 4 search budget exceeded.
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from .constructions import color_cbt, color_cycle, color_path
from .exceptions import (
    BudgetExceededError,
    InadmissibleGraphError,
    InvalidColoringError,
    UnionColoringError,
)
from .generators import generate, parse_family_spec
from .graph import is_admissible, lower_bound, upper_bound, verify
from .io import format_coloring, format_graph, read_coloring, read_graph, to_dot, to_json, write_text
from .models import Coloring, Graph
from .recognition import recognize_cbt, recognize_cycle, recognize_path, relabel_coloring
from .solver import chi_union
from .stars import color_general

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 3
EXIT_BUDGET = 4

STRATEGIES = ("auto", "path", "cycle", "cbt", "general")

# cycles whose optimum is one above the lower bound
_CYCLE_EXCEPTIONS = {3: 3, 7: 4}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="union-coloring",
        description="Construct, verify and solve union vertex-distinguishing edge colorings",
    )
    parser.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="More logging on stderr (-v info, -vv debug)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Write a graph from a named family")
    gen.add_argument("family", help="path, cycle, complete, cbt, star, random (or 'path:5')")
    gen.add_argument("params", nargs="*", help="Family parameters")
    gen.add_argument("--seed", type=int, help="Seed for the random family (rejected for others)")
    gen.add_argument("--out", help="Output file (default: stdout)")

    color = sub.add_parser("color", help="Color a graph")
    color.add_argument("graph", help="Graph file (text or .json)")
    color.add_argument("--strategy", choices=STRATEGIES, default="auto", help="Construction to use (default: auto)")
    color.add_argument("--out", help="Output coloring file (default: stdout)")

    ver = sub.add_parser("verify", help="Check a coloring")
    ver.add_argument("graph", help="Graph file")
    ver.add_argument("coloring", help="Coloring file (text or .json)")
    ver.add_argument("--codes", action="store_true", help="Print every vertex code")

    chi = sub.add_parser("chi", help="Compute chi_union exactly by search")
    chi.add_argument("graph", help="Graph file")
    chi.add_argument("--budget", type=int, help="Node limit per palette size")
    chi.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1)")

    bound = sub.add_parser("bound", help="Print the lower and upper palette bounds")
    bound.add_argument("graph", help="Graph file")

    export = sub.add_parser("export", help="Render a colored graph")
    export.add_argument("graph", help="Graph file")
    export.add_argument("coloring", help="Coloring file")
    export.add_argument("--format", choices=["dot", "json"], default="dot", help="Output format (default: dot)")
    export.add_argument("--out", help="Output file (default: stdout)")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_generate(args: argparse.Namespace) -> int:
    spec = args.family if not args.params else [args.family, *args.params]
    family, params = parse_family_spec(spec)
    if args.seed is not None:
        if family != "random":
            raise ValueError(f"--seed only applies to the random family, not {family}")
        params = tuple(params[:2]) + (args.seed,)
    g = generate(family, *params)
    _emit(format_graph(g), args.out)

    admissible = is_admissible(g)
    lb = lower_bound(g) if admissible else "-"
    print(f"n={g.n} m={g.m} lower_bound={lb} admissible={'yes' if admissible else 'no'}", file=sys.stderr)
    return EXIT_OK


def _color_as_path(g: Graph) -> Optional[Coloring]:
    walk = recognize_path(g)
    if walk is None or g.n < 3:
        return None
    pc = color_path(g.n)
    return relabel_coloring(pc.graph, pc.coloring, walk, g)


def _color_as_cycle(g: Graph) -> Optional[Coloring]:
    walk = recognize_cycle(g)
    if walk is None:
        return None
    coloring, _ = color_cycle(g.n)
    return relabel_coloring(generate("cycle", g.n), coloring, walk, g)


def _color_as_cbt(g: Graph) -> Optional[Coloring]:
    found = recognize_cbt(g)
    if found is None:
        return None
    h, order = found
    cc = color_cbt(h)
    return relabel_coloring(cc.graph, cc.coloring, order, g)


_SHAPED = {
    "path": _color_as_path,
    "cycle": _color_as_cycle,
    "cbt": _color_as_cbt,
}


def choose_coloring(g: Graph, strategy: str) -> Tuple[str, Coloring]:
    """
    Color ``g`` with the requested strategy.

    ``auto`` tries path, cycle and cbt in turn and falls back to general.

    Raises:
        ValueError: If a forced path/cycle/cbt strategy does not fit ``g``
    """
    lower_bound(g)
    if strategy in _SHAPED:
        coloring = _SHAPED[strategy](g)
        if coloring is None:
            raise ValueError(f"graph is not a {strategy}")
        return strategy, coloring
    if strategy == "auto":
        for name, builder in _SHAPED.items():
            coloring = builder(g)
            if coloring is not None:
                logger.info(f"auto strategy detected a {name}")
                return name, coloring
    return "general", color_general(g)


def describe_palette(g: Graph, k: int, strategy: str) -> str:
    excess = k - lower_bound(g)
    if excess == 0:
        text = f"optimal ({k} colors)"
    else:
        text = f"+{excess} over lower bound ({k} colors)"
    if strategy == "cycle" and g.n in _CYCLE_EXCEPTIONS:
        text += f"; chi_union(C_{g.n}) = {_CYCLE_EXCEPTIONS[g.n]}"
    return text


def cmd_color(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    strategy, coloring = choose_coloring(g, args.strategy)
    report = verify(g, coloring)
    if not report.valid:
        raise InvalidColoringError(f"{strategy} produced an invalid coloring; nothing written", report=report)
    _emit(format_coloring(g, coloring), args.out)
    print(f"{strategy}: {describe_palette(g, coloring.k, strategy)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    coloring = read_coloring(args.coloring, g)
    report = verify(g, coloring)
    if args.codes:
        for v, code in enumerate(report.codes):
            print(f"{v}: {code}")
    if report.valid:
        print(f"VALID, {report.colors_used} colors used")
        return EXIT_OK
    print("INVALID")
    if report.empty_edge is not None:
        u, v = g.edges[report.empty_edge]
        print(f"empty edge: {u} {v}")
    if report.clash is not None:
        u, v = report.clash
        print(f"clash: vertices {u} and {v}, code {report.codes[u]}")
    return EXIT_INVALID


def cmd_chi(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    result = chi_union(g, budget=args.budget, jobs=args.jobs)
    if result.proved:
        print(f"chi_union = {result.value} (proved)")
        return EXIT_OK
    print(f"chi_union in [{result.lower},{result.upper}] (budget exceeded)")
    return EXIT_BUDGET


def cmd_bound(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    print(f"n={g.n} lower_bound={lower_bound(g)} upper_bound={upper_bound(g)}")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    coloring = read_coloring(args.coloring, g)
    text = to_dot(g, coloring) if args.format == "dot" else to_json(g, coloring)
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "color": cmd_color,
    "verify": cmd_verify,
    "chi": cmd_chi,
    "bound": cmd_bound,
    "export": cmd_export,
}


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the documented exit code."""
    if isinstance(error, InadmissibleGraphError):
        return EXIT_INADMISSIBLE
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, InvalidColoringError):
        return EXIT_INVALID
    return EXIT_USAGE


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (UnionColoringError, ValueError, OSError) as exc:
        message = exc.message if isinstance(exc, UnionColoringError) else str(exc)
        print(f"Error: {message}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
