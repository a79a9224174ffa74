"""distcol: distance colourings, graph powers, and extremal bipartite
constructions for cycle-constrained graphs."""

from .analysis import (
    DensityReport,
    NotCycleFree,
    PathBoundReport,
    PathPairReport,
    bunched_edge_bound_holds,
    bunched_edge_count,
    contains_cycle,
    density_profile,
    edge_path_pair_statistic,
    even_cycle_edge_bound_check,
    girth,
    odd_girth,
    path_count_bound_check,
    path_pair_statistic,
    peripheral_path_bound_check,
)
from .colouring import (
    Colouring,
    TooLarge,
    distance_chromatic,
    exact_chromatic,
    greedy_colour,
    verify_power_clique,
)
from .constructions import (
    BipartiteOrdering,
    BlockLabelling,
    ConstructionError,
    EvenEdgeConstruction,
    NoComatching,
    NoMatching,
    SizeCapExceeded,
    SizeCaps,
    bbp_product,
    comatching_ordering,
    complete_bipartite,
    complete_bipartite_ordering,
    cycle_3t_product,
    cycle_product,
    even_edge_construction,
    iterated_product,
    matching_ordering,
    projective_plane_incidence,
)
from .dimacs import format_col, parse_col, read_col, write_col
from .graphs import (
    Graph,
    GraphError,
    LayerBipartite,
    LayerDecomposition,
    bfs_layers,
    layer_bipartite,
    line_graph,
    power,
)

__version__ = "0.1.0"
