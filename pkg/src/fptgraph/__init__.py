"""Fixed-parameter dominating set and induced cycle algorithms for degenerate graphs."""

from .colorcoding import (
    ColoringFamilySpec,
    CycleStats,
    default_trials,
    find_induced_cycle_derandomized,
    find_induced_cycle_random,
    find_multicolored_cycle,
    prune_by_colors,
    random_separation,
)
from .cycles_exact import (
    count_cliques,
    find_induced_c4,
    find_induced_c5,
    find_induced_cycle_exact,
    find_triangle,
)
from .domset import (
    DomSetAnswer,
    SearchStats,
    base_case_split,
    dominating_set_degenerate,
    dominating_set_minorfree,
    heavy_dominators,
    reduce_minorfree,
)
from .graph import (
    BWGraph,
    Graph,
    GraphError,
    Orientation,
    build_graph,
    closure_at_depth,
    degeneracy,
    degeneracy_ordering,
    induced_subgraph,
    subdivide_all_edges,
)
from .oracles import (
    GuardExceeded,
    OracleGuard,
    brute_force_clique_count,
    brute_force_domset,
    brute_force_induced_cycle,
    is_dominating,
    is_induced_cycle,
)

__version__ = "0.1.0"
