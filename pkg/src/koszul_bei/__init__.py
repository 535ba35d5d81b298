"""Koszul and closed binomial edge ideals of small graphs, with exact Groebner-basis cross-checks."""

from .bei import (
    binomial_edge_ideal,
    colon_formula_report,
    cycle_monomials,
    f_ij,
    graph_G_e,
    has_quadratic_lex_gb,
    lex_from_vertex_order,
    plucker_check,
    quadratic_gb_exists,
    tent_section4_checks,
    verify_colon_formula,
)
from .betti import BettiTable, betti_table_squarefree, c4_betti_assembly, stanley_reisner
from .classify import ClassificationReport, blocks_all_closed, classify
from .errors import ConsistencyError, CostGuardError, GraphFormatError, LoopError
from .forbidden import InducedWitness, find_induced, find_trampoline, has_induced_claw
from .graph import (
    Graph,
    blocks,
    clique_number,
    cut_vertices,
    encode_graph6,
    is_clique,
    named_graph,
    parse_edge_list,
    parse_graph6,
)
from .orders import (
    EdgeOrder,
    VertexOrder,
    find_claw_avoiding_peeo,
    find_closed_order,
    find_perfect_elimination_order,
    find_strong_elimination_order,
    is_simplicial_edge,
    verify_claw_avoiding_peeo,
    verify_closed_order,
    verify_perfect_elimination_order,
    verify_strong_elimination_order,
)
from .poly import (
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    Ring,
    bei_ring,
    buchberger,
    colon_by_element,
    eliminate,
    ideal_equal,
    ideal_membership,
    initial_ideal,
    normal_form,
    parse_polynomial,
)
from .survey import canonical_form, enumerate_connected_graphs, run_survey

__version__ = "0.1.0"
