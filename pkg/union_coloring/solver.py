"""Exact search for union vertex-distinguishing colorings.

A k-coloring exists iff the vertices can get pairwise distinct non-empty
codes phi(v) over {1..k} such that adjacent codes intersect and every code
is covered by the union of its neighbours' codes. The edge sets are then
phi(u) & phi(v). The search assigns codes vertex by vertex, most-connected
vertex first, and only lets colors enter in first-use order.
"""

import concurrent.futures
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import BudgetExceededError, InvalidColoringError
from .generators import cycle_graph
from .graph import lower_bound, require_admissible, upper_bound, verify
from .models import (
    ChiResult,
    Coloring,
    CycleSeedColoring,
    Graph,
    SearchConfig,
    SearchResult,
    SearchStatus,
)
from .stars import color_general
from .utils import color_bit, full_mask, is_prefix_extension, validate_int

logger = logging.getLogger(__name__)


class _BudgetHit(Exception):
    pass


def vertex_order(g: Graph, start: Optional[int] = None) -> List[int]:
    """
    Static assignment order.

    Next is the vertex with the most already ordered neighbours, then the
    highest degree, then the lowest index.
    """
    if g.n == 0:
        return []
    if start is None:
        start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order = [start]
    placed = [False] * g.n
    placed[start] = True
    links = [0] * g.n
    for w in g.neighbors(start):
        links[w] += 1
    for _ in range(g.n - 1):
        v = max(
            (u for u in range(g.n) if not placed[u]),
            key=lambda u: (links[u], g.degree(u), -u),
        )
        order.append(v)
        placed[v] = True
        for w in g.neighbors(v):
            links[w] += 1
    return order


@dataclass
class _CodeSearch:
    """Backtracking over vertex codes; one instance per search."""
    graph: Graph
    k: int
    symmetry_breaking: bool = True
    node_limit: Optional[int] = None
    start: Optional[int] = None
    fixed: Dict[int, int] = field(default_factory=dict)
    required: Dict[int, int] = field(default_factory=dict)
    nodes: int = 0

    def __post_init__(self) -> None:
        g = self.graph
        self.full = full_mask(self.k)
        self.order = vertex_order(g, self.start)
        position = {v: i for i, v in enumerate(self.order)}
        self.neighbors = [g.neighbors(v) for v in range(g.n)]
        self.earlier = [[w for w in self.neighbors[v] if position[w] < position[v]] for v in self.order]
        # closes[i]: vertices whose closed neighbourhood is complete once position i is set
        self.closes: List[List[int]] = [[] for _ in range(g.n)]
        for w in range(g.n):
            last = max([position[w]] + [position[x] for x in self.neighbors[w]])
            self.closes[last].append(w)
        self.phi = [0] * g.n
        self.taken: set = set()

    def candidates(self, i: int, used: int) -> List[int]:
        """Codes position ``i`` may take given the colors ``used`` so far."""
        v = self.order[i]
        pool: Iterable[int] = (self.fixed[v],) if v in self.fixed else range(1, self.full + 1)
        need = self.required.get(v, 0)
        result = []
        for mask in pool:
            if mask in self.taken or mask & need != need:
                continue
            if self.symmetry_breaking and not is_prefix_extension(used, mask):
                continue
            if any(not mask & self.phi[w] for w in self.earlier[i]):
                continue
            result.append(mask)
        return result

    def _covered(self, w: int) -> bool:
        union = 0
        for x in self.neighbors[w]:
            union |= self.phi[x]
        return self.phi[w] & ~union == 0

    def _place(self, i: int, used: int, choices: Optional[Sequence[int]] = None) -> bool:
        if i == self.graph.n:
            return True
        v = self.order[i]
        for mask in choices if choices is not None else self.candidates(i, used):
            self.nodes += 1
            if self.node_limit is not None and self.nodes > self.node_limit:
                raise _BudgetHit()
            self.phi[v] = mask
            if all(self._covered(w) for w in self.closes[i]):
                self.taken.add(mask)
                if self._place(i + 1, used | mask):
                    return True
                self.taken.discard(mask)
            self.phi[v] = 0
        return False

    def run(self, first: Optional[Sequence[int]] = None) -> Tuple[SearchStatus, Optional[List[int]]]:
        """Search, optionally restricting the first position to ``first``."""
        if self.graph.n > self.full:
            return SearchStatus.EXHAUSTED, None
        try:
            found = self._place(0, 0, first)
        except _BudgetHit:
            return SearchStatus.BUDGET, None
        return (SearchStatus.FOUND, list(self.phi)) if found else (SearchStatus.EXHAUSTED, None)


def coloring_from_codes(g: Graph, k: int, phi: Sequence[int]) -> Coloring:
    """Edge sets phi(u) & phi(v); fails loudly if they do not verify."""
    coloring = Coloring.from_masks(k, (phi[u] & phi[v] for u, v in g.edges))
    report = verify(g, coloring)
    if not report.valid:
        raise InvalidColoringError("search produced an invalid witness", report=report)
    return coloring


def _run_branch(payload: tuple) -> Tuple[SearchStatus, Optional[List[int]], int]:
    """Worker entry point: search one first-vertex code."""
    n, edges, k, symmetry, limit, start, fixed, required, mask = payload
    search = _CodeSearch(
        Graph(n, edges), k, symmetry, limit, start, dict(fixed), dict(required)
    )
    status, phi = search.run(first=(mask,))
    return status, phi, search.nodes


def _search(
    g: Graph,
    cfg: SearchConfig,
    start: Optional[int] = None,
    fixed: Optional[Dict[int, int]] = None,
    required: Optional[Dict[int, int]] = None,
) -> SearchResult:
    search = _CodeSearch(g, cfg.k, cfg.symmetry_breaking, cfg.node_limit, start, fixed or {}, required or {})
    if cfg.jobs == 1 or g.n == 0 or g.n > search.full:
        status, phi = search.run()
        nodes = search.nodes
    else:
        choices = search.candidates(0, 0)
        payloads = [
            (g.n, g.edges, cfg.k, cfg.symmetry_breaking, cfg.node_limit, start,
             tuple((fixed or {}).items()), tuple((required or {}).items()), mask)
            for mask in choices
        ]
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.jobs) as executor:
            outcomes = list(executor.map(_run_branch, payloads))
        nodes = sum(count for _, _, count in outcomes)
        # the first branch in candidate order wins, whatever finished first
        found = next((o for o in outcomes if o[0] is SearchStatus.FOUND), None)
        if found is not None:
            status, phi = found[0], found[1]
        elif any(o[0] is SearchStatus.BUDGET for o in outcomes):
            status, phi = SearchStatus.BUDGET, None
        else:
            status, phi = SearchStatus.EXHAUSTED, None

    logger.debug(f"search n={g.n} k={cfg.k}: {status.value} after {nodes} nodes")
    if status is SearchStatus.BUDGET:
        logger.warning(f"search n={g.n} k={cfg.k} stopped at the node limit ({cfg.node_limit})")
    coloring = coloring_from_codes(g, cfg.k, phi) if phi is not None else None
    return SearchResult(status=status, coloring=coloring, nodes=nodes)


def exists_coloring(g: Graph, cfg: SearchConfig) -> SearchResult:
    """
    Decide whether ``g`` has a union vertex-distinguishing ``cfg.k``-coloring.

    Args:
        g: Admissible graph
        cfg: Palette, node budget, symmetry breaking and worker count

    Returns:
        SearchResult: FOUND with a verified witness, EXHAUSTED when no
        coloring exists, or BUDGET when the node limit cut the search short

    Raises:
        InadmissibleGraphError: If a component has fewer than 3 vertices
    """
    require_admissible(g)
    return _search(g, cfg)


def chi_union(
    g: Graph,
    budget: Optional[int] = None,
    jobs: int = 1,
    symmetry_breaking: bool = True,
) -> ChiResult:
    """
    Smallest palette admitting a union vertex-distinguishing coloring.

    Only the window [lower_bound(g), upper_bound(g)] is searched.

    Args:
        g: Admissible graph
        budget: Node limit for each palette tried
        jobs: Worker processes per search
        symmetry_breaking: Restrict color first use; off searches every code assignment

    Returns:
        ChiResult, exact when ``lower == upper``; otherwise the proven
        lower end and a palette that is known to work
    """
    lb = lower_bound(g)
    if g.n == 0:
        return ChiResult(lower=0, upper=0, witness=Coloring(1, ()))
    proven = lb
    nodes = 0
    for k in range(lb, upper_bound(g) + 1):
        cfg = SearchConfig(k=k, node_limit=budget, symmetry_breaking=symmetry_breaking, jobs=jobs)
        result = exists_coloring(g, cfg)
        nodes += result.nodes
        if result.found:
            return ChiResult(lower=proven, upper=k, witness=result.coloring, nodes=nodes)
        if result.proved_none:
            # no k-coloring means no smaller palette works either
            proven = max(proven, k + 1)

    fallback = color_general(g)
    logger.warning(f"no witness found in the window; falling back to the general palette {fallback.k}")
    return ChiResult(lower=min(proven, fallback.k), upper=fallback.k, witness=fallback, nodes=nodes)


def find_seed_coloring(n: int, k: int, node_limit: Optional[int] = None) -> Optional[CycleSeedColoring]:
    """
    Search for a doubling seed on the cycle with ``n`` vertices.

    The search fixes code(u_1) = {1} and requires color 1 on (u_2, u_3).

    Returns:
        The first seed in search order, or None when none exists

    Raises:
        BudgetExceededError: If ``node_limit`` stops the search
    """
    n = validate_int(n, "n", minimum=3)
    graph = cycle_graph(n)
    one = color_bit(1)
    result = _search(
        graph,
        SearchConfig(k=k, node_limit=node_limit),
        start=0,
        fixed={0: one},
        required={1: one, 2: one},
    )
    if result.status is SearchStatus.BUDGET:
        raise BudgetExceededError(f"seed search for C_{n} hit the node limit", nodes=result.nodes)
    if result.coloring is None:
        return None
    return CycleSeedColoring(graph=graph, coloring=result.coloring, k=k)
