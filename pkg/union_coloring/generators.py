"""Graph family generators with deterministic vertex numbering."""

import logging
import random
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import networkx as nx

from .exceptions import UnionColoringError
from .graph import build_graph, is_admissible
from .models import Graph
from .utils import validate_branch_lengths, validate_int, validate_probability

logger = logging.getLogger(__name__)

FAMILIES = ("path", "cycle", "complete", "cbt", "star", "random")


def path_graph(n: int) -> Graph:
    """Path u_1 .. u_n numbered 0..n-1 along the walk."""
    n = validate_int(n, "n", minimum=1)
    return Graph(n, tuple(zip(range(n - 1), range(1, n))))


def cycle_graph(n: int) -> Graph:
    """Cycle numbered 0..n-1 along the walk; closing edge (0, n-1)."""
    n = validate_int(n, "n", minimum=3)
    return Graph(n, ((0, 1), (0, n - 1)) + tuple(zip(range(1, n - 1), range(2, n))))


def complete_graph(n: int) -> Graph:
    n = validate_int(n, "n", minimum=1)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_binary_tree(h: int) -> Graph:
    """
    Complete binary tree of height ``h`` in level order.

    The root is 0 and the children of ``i`` are ``2i+1`` and ``2i+2``.
    """
    h = validate_int(h, "h", minimum=0)
    n = (1 << (h + 1)) - 1
    return Graph(n, tuple(((i - 1) // 2, i) for i in range(1, n)))


def one_star(lengths: Sequence[int]) -> Graph:
    """
    1-star with the given branch lengths.

    Numbering: center 0, then the mids X, then their ends Y (in branch
    order), then the direct leaves Z.
    """
    lengths = validate_branch_lengths(lengths)
    long_count = sum(1 for length in lengths if length == 2)
    short_count = len(lengths) - long_count
    n = 1 + 2 * long_count + short_count

    edges = []
    for i in range(long_count):
        mid = 1 + i
        end = 1 + long_count + i
        edges.append((0, mid))
        edges.append((mid, end))
    for i in range(short_count):
        edges.append((0, 1 + 2 * long_count + i))
    return build_graph(n, edges)


def random_admissible_graph(
    n: int,
    p: float,
    seed: Optional[int] = None,
    max_tries: int = 1000,
) -> Graph:
    """
    Sample G(n, p) until every component has at least 3 vertices.

    Args:
        n: Number of vertices (>= 3)
        p: Edge probability
        seed: Seed for the sampler; the same seed gives the same graph
        max_tries: Attempts before giving up

    Raises:
        UnionColoringError: If no admissible sample was drawn in time
    """
    n = validate_int(n, "n", minimum=3)
    p = validate_probability(p)
    validate_int(max_tries, "max_tries", minimum=1)

    rng = random.Random(seed)
    for attempt in range(1, max_tries + 1):
        sample = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        g = build_graph(n, sample.edges())
        if is_admissible(g):
            logger.debug(f"random graph n={n} p={p} accepted after {attempt} tries")
            return g
    raise UnionColoringError(
        f"no admissible G({n}, {p}) sample in {max_tries} tries",
        details={"n": n, "p": p, "seed": seed},
    )


def _random_from_params(n: int, p: float, seed: Optional[int] = None) -> Graph:
    return random_admissible_graph(n, p, seed=seed)


_BUILDERS: Dict[str, Callable[..., Graph]] = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "cbt": complete_binary_tree,
    "star": lambda *lengths: one_star(list(lengths)),
    "random": _random_from_params,
}


def generate(family: str, *params: Any) -> Graph:
    """
    Build a member of a named family.

    Args:
        family: One of path, cycle, complete, cbt, star, random
        *params: Family parameters (star takes the branch lengths,
            random takes ``n, p[, seed]``)

    Raises:
        ValueError: Unknown family or parameters out of range
    """
    builder = _BUILDERS.get(family)
    if builder is None:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    try:
        return builder(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {family}: {exc}") from None


def _parse_number(token: str) -> Union[int, float]:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"expected a number, got {token!r}") from None


def parse_family_spec(spec: Union[str, Sequence[str]]) -> tuple:
    """
    Parse ``"path:5"``, ``"star:2,2,1"`` or tokens like ``["random", "10", "0.4"]``.

    Returns:
        ``(family, params)`` ready for :func:`generate`
    """
    if isinstance(spec, str):
        family, _, rest = spec.partition(":")
        tokens: List[str] = [t for t in rest.replace(",", " ").split() if t]
    else:
        if not spec:
            raise ValueError("empty family spec")
        family = spec[0]
        tokens = [t for token in spec[1:] for t in token.replace(",", " ").split() if t]

    family = family.strip().lower()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")

    params: List[Any] = [_parse_number(t) for t in tokens]
    if family != "random" and any(isinstance(p, float) for p in params):
        raise ValueError(f"{family} parameters must be integers")
    if family == "random" and len(params) >= 3:
        params[2] = int(params[2])
    return family, tuple(params)
