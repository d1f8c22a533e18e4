"""Tournament decomposition toolkit.

Bitmask tournaments with canonical codes, interval and indecomposability
tests, the outside-block machinery over a core, named constructions, the
five-vertex window analysis, and an exhaustive small-order census with
machine-checkable theorem verdicts.
"""
from .core import (
    MAX_VERTICES,
    Tournament,
    UndirectedGraph,
    VertexSet,
    canonical_code,
    dual,
    from_rows,
    graph_from_edges,
    is_canonically_labeled,
    is_isomorphic,
    make_tournament,
    out_neighbors,
    random_tournament,
    relabel,
    subtournament,
    tournament_from_code,
)
from .decomposition import (
    OutsidePartition,
    SayarComponent,
    SayarReport,
    check_sayar,
    connected_components,
    is_indecomposable,
    is_interval,
    is_partially_critical,
    nontrivial_intervals,
    outside_graph,
    outside_partition,
    support,
    transitive_min_max,
)
from .errors import (
    AmbiguousSpec,
    BadParameters,
    BadSize,
    BudgetExceeded,
    ConflictingPair,
    CoreNotIndecomposable,
    CoreTooSmall,
    InfeasibleSpec,
    MissingPair,
    NoEligibleVertex,
    NotFamilyT,
    NotIndecomposable,
    NotTransitive,
    SelfArc,
    TournamentError,
    VertexOutOfRange,
)
from .generators import (
    FAMILIES,
    FamilySpec,
    assemble_family,
    gen_b6,
    gen_critical,
    gen_g2n,
    gen_h_figure3,
    gen_paley7,
    size_compositions,
)
from .w5 import (
    W5Report,
    c_invariant,
    embeds,
    is_family_T_member,
    is_minimal_for_pair,
    w5_vertex_set,
)
from .verification import (
    MAX_CENSUS_N,
    CensusEntry,
    VerdictReport,
    census_entries,
    census_records,
    enumerate_tournaments,
    verify_hik,
    verify_latka,
    verify_lemma_suite,
    verify_main,
)
from .cli import format_record, parse_record

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "Tournament",
    "UndirectedGraph",
    "VertexSet",
    "canonical_code",
    "dual",
    "from_rows",
    "graph_from_edges",
    "is_canonically_labeled",
    "is_isomorphic",
    "make_tournament",
    "out_neighbors",
    "random_tournament",
    "relabel",
    "subtournament",
    "tournament_from_code",
    "OutsidePartition",
    "SayarComponent",
    "SayarReport",
    "check_sayar",
    "connected_components",
    "is_indecomposable",
    "is_interval",
    "is_partially_critical",
    "nontrivial_intervals",
    "outside_graph",
    "outside_partition",
    "support",
    "transitive_min_max",
    "AmbiguousSpec",
    "BadParameters",
    "BadSize",
    "BudgetExceeded",
    "ConflictingPair",
    "CoreNotIndecomposable",
    "CoreTooSmall",
    "InfeasibleSpec",
    "MissingPair",
    "NoEligibleVertex",
    "NotFamilyT",
    "NotIndecomposable",
    "NotTransitive",
    "SelfArc",
    "TournamentError",
    "VertexOutOfRange",
    "FAMILIES",
    "FamilySpec",
    "assemble_family",
    "gen_b6",
    "gen_critical",
    "gen_g2n",
    "gen_h_figure3",
    "gen_paley7",
    "size_compositions",
    "W5Report",
    "c_invariant",
    "embeds",
    "is_family_T_member",
    "is_minimal_for_pair",
    "w5_vertex_set",
    "MAX_CENSUS_N",
    "CensusEntry",
    "VerdictReport",
    "census_entries",
    "census_records",
    "enumerate_tournaments",
    "verify_hik",
    "verify_latka",
    "verify_lemma_suite",
    "verify_main",
    "format_record",
    "parse_record",
    "__version__",
]
