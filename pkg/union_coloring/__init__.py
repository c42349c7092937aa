"""
Union Coloring - union vertex-distinguishing edge colorings of graphs

Every edge gets a non-empty set of colors; the code of a vertex is the
union of the sets on its edges, and all codes must differ. The package
builds optimal colorings of paths, cycles and complete binary trees,
colors any admissible graph within two colors of the lower bound, and
computes the exact minimum palette of small graphs by search.

Example:
    from union_coloring import build_graph, color_general, chi_union, verify

    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])

    # Palette within lower_bound(g) + 2
    coloring = color_general(g)
    assert verify(g, coloring).valid

    # Exact value by exhaustive search
    result = chi_union(g)
    print(result.value)
"""

from .constructions import (
    check_cbt,
    check_path_conditions,
    check_seed,
    color_cbt,
    color_cycle,
    color_path,
    cycle_doubling_chain,
    double_cycle_seed,
)
from .exceptions import (
    BudgetExceededError,
    ColoringError,
    ConstructionError,
    FormatError,
    InadmissibleGraphError,
    InvalidColoringError,
    InvalidGraphError,
    SeedInvariantError,
    UnionColoringError,
)
from .generators import generate
from .graph import build_graph, code, codes, components, is_admissible, lower_bound, upper_bound, verify
from .models import (
    CbtColoring,
    ChiResult,
    ColoredGraph,
    ColorSet,
    Coloring,
    CycleSeedColoring,
    Graph,
    KGraphTag,
    OneStar,
    PathColoring,
    SearchConfig,
    SearchResult,
    SearchStatus,
    StarForest,
    VerifyReport,
)
from .recognition import recognize_cbt, recognize_cycle, recognize_path, relabel_coloring
from .seeds import load_seed, save_seed
from .solver import chi_union, exists_coloring, find_seed_coloring
from .stars import (
    check_star_forest,
    color_1star,
    color_general,
    combine_disjoint,
    decompose_1stars,
    kgraph_tag,
    lift_to_supergraph,
    merge_two_kgraphs,
)

__version__ = "1.0.0"
__all__ = [
    "BudgetExceededError",
    "CbtColoring",
    "ChiResult",
    "ColorSet",
    "ColoredGraph",
    "Coloring",
    "ColoringError",
    "ConstructionError",
    "CycleSeedColoring",
    "FormatError",
    "Graph",
    "InadmissibleGraphError",
    "InvalidColoringError",
    "InvalidGraphError",
    "KGraphTag",
    "OneStar",
    "PathColoring",
    "SearchConfig",
    "SearchResult",
    "SearchStatus",
    "SeedInvariantError",
    "StarForest",
    "UnionColoringError",
    "VerifyReport",
    "build_graph",
    "check_cbt",
    "check_path_conditions",
    "check_seed",
    "check_star_forest",
    "chi_union",
    "code",
    "codes",
    "color_1star",
    "color_cbt",
    "color_cycle",
    "color_general",
    "color_path",
    "combine_disjoint",
    "components",
    "cycle_doubling_chain",
    "decompose_1stars",
    "double_cycle_seed",
    "exists_coloring",
    "find_seed_coloring",
    "generate",
    "is_admissible",
    "kgraph_tag",
    "lift_to_supergraph",
    "load_seed",
    "lower_bound",
    "merge_two_kgraphs",
    "recognize_cbt",
    "recognize_cycle",
    "recognize_path",
    "relabel_coloring",
    "save_seed",
    "upper_bound",
    "verify",
]
