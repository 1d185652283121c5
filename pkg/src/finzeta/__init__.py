"""Finite multiple zeta values over divisor chains and their limit objects."""

from .arith import (
    Factorization,
    bounded_partition_count,
    chain_count,
    divisor_chains,
    divisors,
    factorize,
    mobius,
    multiplicative_lift,
    multiplicative_sieve,
    primes,
    sigma,
)
from .boundary import IntPoly, UnitarityVerdict, build_G, classify, factor_H, poly_roots
from .limits import (
    CoeffPair,
    DirichletCoeffs,
    F_kl_coeffs,
    dirichlet_convolve,
    powerful_zeta_factorization,
    riemann_zeta,
    zeta_m_inf,
    zeta_m_inf_truncated,
    zeta_m_st_coeffs,
)
from .powerful import (
    CanonicalRep,
    canonical_rep,
    decompose_powerful,
    is_step_powerful,
    sieve_step_powerful,
)
from .qpoly import (
    MultiQPoly,
    QSeries,
    Signature,
    complete_symmetric,
    gfun_finite,
    gfun_infinite_closed,
    gfun_recurrence,
    qbinom,
)
from .stats import (
    AverageResult,
    EisensteinSeries,
    average_experiment,
    coefficient_identity_check,
    eisen1_check,
    eisenstein_coeffs,
    g_count,
)
from .zeta import (
    EulerFactorSingularity,
    ZeroLocation,
    circle_order_estimate,
    eval_brute,
    eval_euler,
    eval_multivar,
    grid_min_abs,
    predicted_zeros,
    special_value,
    zero_multiplicity,
)

__version__ = "0.1.0"

__all__ = [
    "AverageResult",
    "CanonicalRep",
    "CoeffPair",
    "DirichletCoeffs",
    "EisensteinSeries",
    "EulerFactorSingularity",
    "F_kl_coeffs",
    "Factorization",
    "IntPoly",
    "MultiQPoly",
    "QSeries",
    "Signature",
    "UnitarityVerdict",
    "ZeroLocation",
    "average_experiment",
    "bounded_partition_count",
    "build_G",
    "canonical_rep",
    "chain_count",
    "circle_order_estimate",
    "classify",
    "coefficient_identity_check",
    "complete_symmetric",
    "decompose_powerful",
    "dirichlet_convolve",
    "divisor_chains",
    "divisors",
    "eisen1_check",
    "eisenstein_coeffs",
    "eval_brute",
    "eval_euler",
    "eval_multivar",
    "factor_H",
    "factorize",
    "g_count",
    "gfun_finite",
    "gfun_infinite_closed",
    "gfun_recurrence",
    "grid_min_abs",
    "is_step_powerful",
    "mobius",
    "multiplicative_lift",
    "multiplicative_sieve",
    "poly_roots",
    "powerful_zeta_factorization",
    "predicted_zeros",
    "primes",
    "qbinom",
    "riemann_zeta",
    "sieve_step_powerful",
    "sigma",
    "special_value",
    "zero_multiplicity",
    "zeta_m_inf",
    "zeta_m_inf_truncated",
    "zeta_m_st_coeffs",
]
