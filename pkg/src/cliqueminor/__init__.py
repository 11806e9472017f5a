"""Exact clique counting, clique minors and extremal shapes for small graphs."""

__version__ = "0.1.0"

from .cliques import CliqueCensus, clique_census, clique_count, clique_number, count_cliques_naive, peeling_trace
from .errors import BudgetExhausted, CliqueMinorError, GuardError, InputError, ParseError, PreconditionError
from .extremal import (
    ForbiddenMinorSpec,
    envelope_build,
    extremal_exponent,
    extremal_union_construct,
    family_ip_optimum,
    k_s_bound,
    shape_minor_free,
    single_minor_optimum,
    small_n_bound,
    wood_bound,
)
from .graph import (
    Graph,
    ShapeParams,
    complement,
    complement_of_matching,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    path_graph,
    relabel,
    star_graph,
)
from .graphio import parse_graph, serialize_graph
from .matching import Matching, maximum_matching, missing_matching_size
from .minors import MinorModel, find_minor_model, hadwiger_dense, hadwiger_exact, is_minor
from .social import best_contraction_minor, bad_vertices, is_social, verify_independent_fraction
from .suites import VerificationResult, run_suite
