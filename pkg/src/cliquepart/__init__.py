"""cliquepart: lazy, exactly-once enumeration of maximal clique-partitions."""
from ._kernels import BACKEND
from .cover import (
    CoverContext,
    build_cover_context,
    cliques_of_set,
    count_upper_bound,
    cover_context,
    maximal_cliques,
)
from .families import gen_gmn, gen_gn, gen_hn, gen_two_clique, parse_family
from .graph import (
    Graph,
    ParseError,
    VertexSet,
    is_clique,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
)
from .oracle import (
    DEFAULT_LEAF_CAP,
    OracleLimitError,
    brute_force_all_partitions,
    is_maximal_partition,
)
from .search import (
    Configuration,
    EnumState,
    Partition,
    apply_decision,
    count_partitions,
    has_next,
    init_search,
    initial_configuration,
    is_t1_or_t2,
    iter_partitions,
    next_partition,
    to_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Configuration",
    "CoverContext",
    "DEFAULT_LEAF_CAP",
    "EnumState",
    "Graph",
    "OracleLimitError",
    "ParseError",
    "Partition",
    "VertexSet",
    "apply_decision",
    "brute_force_all_partitions",
    "build_cover_context",
    "cliques_of_set",
    "count_partitions",
    "count_upper_bound",
    "cover_context",
    "gen_gmn",
    "gen_gn",
    "gen_hn",
    "gen_two_clique",
    "has_next",
    "init_search",
    "initial_configuration",
    "is_clique",
    "is_maximal_partition",
    "is_t1_or_t2",
    "iter_partitions",
    "maximal_cliques",
    "next_partition",
    "parse_dimacs",
    "parse_edge_list",
    "parse_family",
    "to_dimacs",
    "to_edge_list",
    "to_partition",
    "__version__",
]
