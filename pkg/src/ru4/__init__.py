"""Exact algebra of cyclic codes of odd length over R = Z4 + uZ4 (u^2 = 0)."""

from .codes import (
    BchResult,
    CodeDecomposition,
    CodeSummary,
    CyclicCode,
    LocalIdeal,
    LocalKind,
    RankReport,
    Z4CyclicCode,
    bch_bound,
    brute_force_dual,
    code_from_generators,
    code_size,
    count_cyclic_codes,
    decompose,
    dual,
    dual_idempotent,
    enumerate_codewords,
    enumerate_cyclic_codes,
    free_basis,
    gray_image,
    idempotent_generator,
    is_free,
    min_distance,
    rank_and_spanning,
    res_code,
    tor_code,
    z4_freeness_report,
)
from .factor import (
    CrtIdempotentSet,
    CyclotomicCoset,
    FactorizationRecord,
    PreconditionError,
    crt_idempotents,
    cyclotomic_cosets,
    factor_xn1,
    factor_xn1_f2,
    hensel_lift,
    hensel_lift_newton,
    is_basic_irreducible,
    is_basic_primitive,
)
from .galois import (
    GaloisRing,
    GaloisRingElement,
    TeichmullerCoords,
    frobenius,
    gr_arith,
    gr_construct,
    gr_inverse,
    gr_is_unit,
    gr_pow,
    minimal_polynomial,
    nth_roots,
    teichmuller_decompose,
)
from .poly import (
    NotCoprimeError,
    NotRegularError,
    Polynomial,
    ResiduePolynomial,
    bezout_lift,
    is_regular,
    monic_associate,
    poly_arith,
    poly_divmod,
    proj_mod_maximal,
    proj_mod_u,
    reciprocal,
)
from .ring import (
    F2,
    R,
    Z4,
    GrayPair,
    IdealOfR,
    IdealTag,
    NotAUnitError,
    RingElement,
    gray_symbol,
    lee_weight,
    list_ideals,
    r_add,
    r_classify,
    r_inverse,
    r_mul,
    r_neg,
    r_sub,
)

__version__ = "0.1.0"
