"""coxkit: weighted Coxeter graphs, exact generalized geometric
representations, faithfulness certificates, and the numbers game."""

from .cyclotomic import (
    INFINITY,
    CyclotomicNumber,
    ONE,
    ZERO,
    is_real,
    order_of,
    parse_scalar,
    rational,
    sign_of_real,
    two_cos,
    zeta,
)
from .graphs import (
    Balanced,
    CoxeterGraph,
    Unbalanced,
    WeightFunction,
    check_balanced,
    cycle_weight,
    format_graph,
    fundamental_cycles,
    gather_cycle,
    graph_from_json,
    graph_to_json,
    parse_graph,
    simple_cycles,
    validate_legal,
)
from .matrices import Matrix
from .georep import (
    EdgeCoefficients,
    GeneratorSet,
    evaluate_word,
    gauge_conjugate,
    gauge_from_potentials,
    generalized_generators,
    k_coefficients,
    standard_generators,
    verify_coxeter_relations,
    words_equal_in_group,
)
from .classify import (
    FaithfulAffineCycle,
    FaithfulBalanced,
    NotFaithful,
    Unknown,
    classify,
    monomial_witness,
    quotient_order,
    verdict_to_json,
)
from .groupenum import (
    AffinePermutation,
    MonomialMatrix,
    affine_compose,
    affine_from_monomial,
    bfs_enumerate,
    monomial_compose,
    monomial_from_matrix,
    verify_affine_iso,
)
from .numbersgame import (
    MoveClass,
    PlayRecord,
    brute_force_is_reduced,
    classical_k,
    descent_set,
    fire,
    gauged_start,
    imo_pentagon_run,
    is_reduced,
    move_class,
    play,
    reachable_positions,
    unit_position,
    validate_generalized_weights,
)

__version__ = "0.1.0"
