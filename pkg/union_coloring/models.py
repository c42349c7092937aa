"""Data models for graphs, colorings and construction results."""

from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from operator import or_
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from .exceptions import ColoringError, ConstructionError, InvalidGraphError
from .utils import (
    colors_of,
    format_mask,
    full_mask,
    mask_from_colors,
    palette_lower_bound,
    popcount,
    validate_int,
    validate_node_limit,
    validate_palette,
)

Edge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class ColorSet:
    """Subset of {1, ..., 64}; bit ``c - 1`` holds color ``c``."""
    bits: int = 0

    @classmethod
    def of(cls, *colors: int) -> "ColorSet":
        return cls(mask_from_colors(colors))

    @classmethod
    def from_colors(cls, colors: Iterable[int]) -> "ColorSet":
        return cls(mask_from_colors(colors))

    @property
    def colors(self) -> List[int]:
        return colors_of(self.bits)

    def issubset(self, other: "ColorSet") -> bool:
        return self.bits & ~other.bits == 0

    def __contains__(self, color: object) -> bool:
        return isinstance(color, int) and color >= 1 and bool(self.bits >> (color - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __or__(self, other: "ColorSet") -> "ColorSet":
        return ColorSet(self.bits | other.bits)

    def __and__(self, other: "ColorSet") -> "ColorSet":
        return ColorSet(self.bits & other.bits)

    def __sub__(self, other: "ColorSet") -> "ColorSet":
        return ColorSet(self.bits & ~other.bits)

    def __str__(self) -> str:
        return format_mask(self.bits)


@lru_cache(maxsize=1 << 17)
def color_set(mask: int) -> ColorSet:
    """Shared ColorSet for ``mask``; instances are immutable."""
    return ColorSet(mask)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored canonically: ``(min, max)`` pairs, sorted, no duplicates.
    Use :func:`union_coloring.graph.build_graph` to canonicalize raw input.
    """
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        n, edges = self.n, self.edges
        if not all(0 <= u < v < n for u, v in edges):
            bad = next(e for e in edges if not 0 <= e[0] < e[1] < n)
            raise InvalidGraphError(f"edge {bad} is not canonical for n={n}")
        if not all(a < b for a, b in zip(edges, edges[1:])):
            raise InvalidGraphError("edges must be sorted and duplicate-free")

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Incident edge indices per vertex."""
        incident: List[List[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            incident[u].append(i)
            incident[v].append(i)
        return tuple(tuple(a) for a in incident)

    @cached_property
    def _index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def neighbors(self, u: int) -> List[int]:
        result = []
        for i in self.adjacency[u]:
            a, b = self.edges[i]
            result.append(b if a == u else a)
        return result

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``uv`` in :attr:`edges`."""
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise InvalidGraphError(f"no edge between {u} and {v}") from None

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Graph":
        from .graph import build_graph

        return build_graph(data.get("n", 0), [tuple(e) for e in data.get("edges") or []])


@dataclass(frozen=True)
class Coloring:
    """Per-edge color sets over palette {1..k}, indexed like ``Graph.edges``."""
    k: int
    sets: Tuple[ColorSet, ...]

    def __post_init__(self) -> None:
        try:
            validate_palette(self.k)
        except ValueError as exc:
            raise ColoringError(str(exc)) from None
        limit = full_mask(self.k)
        if reduce(or_, self.masks, 0) & ~limit:
            i, s = next((i, s) for i, s in enumerate(self.sets) if s.bits & ~limit)
            raise ColoringError(
                f"edge {i} uses color {s.bits.bit_length()} beyond palette {self.k}"
            )

    @classmethod
    def from_masks(cls, k: int, masks: Iterable[int]) -> "Coloring":
        return cls(k, tuple(map(color_set, masks)))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(s.bits for s in self.sets)

    @property
    def colors_used(self) -> int:
        """Number of distinct colors appearing on some edge."""
        return popcount(reduce(or_, self.masks, 0))

    def __len__(self) -> int:
        return len(self.sets)

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "colors": [s.colors for s in self.sets]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Coloring":
        colors = data.get("colors") or []
        sets = tuple(ColorSet.from_colors(c) for c in colors)
        k = data.get("k")
        if k is None:
            k = max((s.bits.bit_length() for s in sets), default=1) or 1
        return cls(k, sets)


@dataclass(frozen=True)
class VerifyReport:
    """Verdict of the union vertex-distinguishing check."""
    valid: bool
    codes: Tuple[ColorSet, ...]
    clash: Optional[Tuple[int, int]] = None
    empty_edge: Optional[int] = None
    colors_used: int = 0

    @property
    def distinct_codes(self) -> int:
        return len(set(self.codes))


@dataclass(frozen=True)
class PathColoring:
    """Optimal coloring of the canonical path u_1 .. u_n."""
    graph: Graph
    coloring: Coloring
    m: int


@dataclass(frozen=True)
class CycleSeedColoring:
    """Coloring of C_{2^k-1} with code(u1)={1} and 1 in f(u2,u3)."""
    graph: Graph
    coloring: Coloring
    k: int


@dataclass(frozen=True)
class CbtColoring:
    """Optimal coloring of the complete binary tree of height h.

    ``primed_subtree`` is the root (in level order) of the copy that carries
    color h+1 on every edge; ``fixups`` lists the corrected vertex of each
    inductive step, in that step's own numbering.
    """
    graph: Graph
    coloring: Coloring
    h: int
    primed_subtree: int = 2
    fixups: Tuple[int, ...] = ()


@dataclass(frozen=True)
class OneStar:
    """Center with at least two branches of length 1 or 2.

    A branch is ``(leaf,)`` or ``(mid, end)``.
    """
    center: int
    branches: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.branches) < 2:
            raise ConstructionError(f"1-star at {self.center} needs at least two branches")
        if any(len(b) not in (1, 2) for b in self.branches):
            raise ConstructionError(f"1-star at {self.center} has a branch longer than 2")
        seen = [self.center] + [v for b in self.branches for v in b]
        if len(set(seen)) != len(seen):
            raise ConstructionError(f"1-star at {self.center} repeats a vertex")

    @property
    def mids(self) -> Tuple[int, ...]:
        return tuple(b[0] for b in self.branches if len(b) == 2)

    @property
    def ends(self) -> Tuple[int, ...]:
        return tuple(b[1] for b in self.branches if len(b) == 2)

    @property
    def leaves(self) -> Tuple[int, ...]:
        return tuple(b[0] for b in self.branches if len(b) == 1)

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Center, then mids, then ends, then direct leaves."""
        return (self.center,) + self.mids + self.ends + self.leaves

    @property
    def n(self) -> int:
        return 1 + sum(len(b) for b in self.branches)

    @property
    def edges(self) -> List[Edge]:
        result = []
        for branch in self.branches:
            path = (self.center,) + tuple(branch)
            for a, b in zip(path, path[1:]):
                result.append((min(a, b), max(a, b)))
        return result

    def local_graph(self) -> Graph:
        """The star renumbered center 0, mids, ends, leaves."""
        position = {v: i for i, v in enumerate(self.vertices)}
        pairs = [(position[a], position[b]) for a, b in self.edges]
        return Graph(self.n, tuple(sorted((min(a, b), max(a, b)) for a, b in pairs)))


@dataclass(frozen=True)
class StarForest:
    """Spanning edge-subgraph of ``host`` whose components are 1-stars."""
    host: Graph
    stars: Tuple[OneStar, ...]

    @property
    def edges(self) -> List[Edge]:
        return sorted(e for star in self.stars for e in star.edges)

    def subgraph(self) -> Graph:
        return Graph(self.host.n, tuple(self.edges))


@dataclass(frozen=True)
class KGraphTag:
    """k with 2^k <= n <= 2^(k+1) - 1."""
    k: int

    @classmethod
    def for_order(cls, n: int) -> "KGraphTag":
        validate_int(n, "n", minimum=1)
        return cls(palette_lower_bound(n) - 1)


@dataclass(frozen=True)
class ColoredGraph:
    """A colored graph whose local vertex ``i`` is host vertex ``labels[i]``."""
    graph: Graph
    coloring: Coloring
    labels: Tuple[int, ...]

    @property
    def tag(self) -> KGraphTag:
        return KGraphTag.for_order(self.graph.n)

    @property
    def is_optimal(self) -> bool:
        return self.coloring.k == palette_lower_bound(self.graph.n)


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of the exact existence search."""
    k: int
    node_limit: Optional[int] = None
    symmetry_breaking: bool = True
    jobs: int = 1

    def __post_init__(self) -> None:
        validate_palette(self.k)
        validate_node_limit(self.node_limit)
        validate_int(self.jobs, "jobs", minimum=1)


class SearchStatus(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET = "budget"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one existence search."""
    status: SearchStatus
    coloring: Optional[Coloring] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    @property
    def proved_none(self) -> bool:
        return self.status is SearchStatus.EXHAUSTED


@dataclass(frozen=True)
class ChiResult:
    """Exact value (``lower == upper``) or a proven interval."""
    lower: int
    upper: int
    witness: Optional[Coloring] = None
    nodes: int = 0

    @property
    def proved(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.proved else None
