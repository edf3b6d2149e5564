"""Products of Lukasiewicz chains, their extended-multiset duals, and
executable checks of the structural theory connecting them."""

from .chain import (
    ChainError,
    ChainMismatchError,
    ChainSize,
    ChainValue,
    LINF,
    NotInChainError,
    OutOfRangeError,
    chain_subset,
    make_chain_value,
    mv_op,
    nat_mult,
)
from .algebra import (
    Element,
    ProductAlgebra,
    SupportIdeal,
    archimedean_rank,
    boolean_center_contains,
    brute_force_homs,
    brute_force_ideals,
    characteristic,
    enumerate_elements,
    ideal_membership,
    ideal_sup,
    leq_elem,
    make_algebra,
    make_element,
    maximal_ideals,
    pointwise_op,
    principal_ideal,
    prop21_report,
    quotient_by_maximal,
    split_fin_inf,
    unit,
    zero,
)
from .multiset import (
    EMMorphism,
    EMultiset,
    INF,
    OMEGA,
    Profile,
    compose_morphisms,
    enumerate_morphisms,
    identity_morphism,
    is_isomorphic,
    make_multiset,
    make_profile,
    profile_of,
    validate_morphism,
)
from .duality import (
    ContinuousHom,
    F_mor,
    F_obj,
    H_mor,
    H_obj,
    apply_hom,
    check_naturality_eq1,
    check_naturality_eq2,
    compose_homs,
    enumerate_continuous_homs,
    epsilon,
    eta,
    identity_hom,
    make_hom,
    projection,
)
from .structure import (
    injective_in_EM,
    is_extremally_disconnected,
    is_hyperarchimedean,
    is_projective,
    is_stone,
    is_surjective_hom,
    lift,
    separate,
    urysohn_strauss_holds,
)
from .dsl import (
    ParseError,
    Term,
    eval_term,
    parse_algebra,
    parse_multiset,
    parse_term,
    render,
)

__version__ = "0.1.0"
