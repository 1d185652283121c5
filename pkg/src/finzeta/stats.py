"""Counting function g^m_N(n), empirical Tauberian averages, Eisenstein-type
q-series coefficients."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    bounded_partition_count,
    divisor_chains,
    divisors,
    factorize,
    multiplicative_sieve,
    sigma as divisor_sigma,
)
from .limits import riemann_zeta
from .zeta import eval_brute

_RATE_NOTE = (
    "no convergence rate is proved for these averages; "
    "tolerances are engineering choices"
)


def g_count(n: int, max_part: int, max_len: int | None = None) -> int:
    """Multiplicative count with local factor = partitions of ord_p n having
    parts <= max_part and length <= max_len (None = unbounded).

    g^m_infinity(n) is g_count(n, m); g^m_N over a prime power N = p^l is
    g_count(n, m, l).
    """
    if n < 1 or max_part < 1:
        raise ValueError("need n >= 1 and max_part >= 1")
    if max_len is not None and max_len < 1:
        raise ValueError("max_len must be >= 1 or None")
    out = 1
    for _, e in factorize(n):
        out *= bounded_partition_count(e, max_part, max_len)
    return out


def coefficient_identity_check(N: int, m: int) -> bool:
    """True iff the multiset of chain products over divisor_chains(N, m)
    matches n -> prod_p (partitions of ord_p n, parts <= m, length <= ord_p N)
    supported on divisors of N^m."""
    if N < 1 or m < 1:
        raise ValueError("need N, m >= 1")
    got = Counter(math.prod(chain) for chain in divisor_chains(N, m))
    fact = factorize(N)
    predicted: dict[int, int] = {}
    for d in divisors(N**m):
        val = 1
        dfact = factorize(d)
        for p, l in fact:
            val *= bounded_partition_count(dfact.ord(p), m, l)
        if val:
            predicted[d] = val
    return got == predicted


@dataclass(frozen=True)
class AverageResult:
    kind: str
    m: int
    sigma: float | None
    bound: int
    beta: float
    alpha: int
    predicted: float
    empirical: float
    curve: tuple[tuple[int, float], ...]
    note: str


def average_experiment(kind: str, m: int, bound: int, sigma: float | None = None) -> AverageResult:
    """Partial sums of a_n against the main term x^beta (log x)^alpha.

    kind "g_m_inf":    a_n = g^m_infinity(n),  beta 1,           alpha 0
    kind "Z_at_sigma": a_n = Z^m_n(-sigma),    beta 1 + m*sigma, alpha 0
    kind "Z_at_zero":  a_n = Z^m_n(0),         beta 1,           alpha m

    Returns the empirical constant S(bound)/main(bound), the predicted
    constant from the pole data, and the ratio curve at decade checkpoints
    so slow convergence stays visible.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if bound < 10**3:
        raise ValueError("bound must be >= 10^3")

    if kind == "g_m_inf":
        beta, alpha = 1.0, 0
        predicted = math.prod(riemann_zeta(k) for k in range(2, m + 1))

        def local(p, e):
            return bounded_partition_count(e, m)

        note = _RATE_NOTE
    elif kind == "Z_at_zero":
        beta, alpha = 1.0, m
        predicted = 1.0 / math.factorial(m)

        def local(p, e):
            return math.comb(e + m, m)

        note = _RATE_NOTE + "; log-power corrections make this the slowest case"
    elif kind == "Z_at_sigma":
        if sigma is None or sigma <= 0:
            raise ValueError("Z_at_sigma needs sigma > 0")
        sig = float(sigma)
        beta, alpha = 1.0 + m * sig, 0
        predicted = math.prod(
            riemann_zeta(1.0 + j * sig) for j in range(1, m + 1)
        ) / (1.0 + m * sig)

        def local(p, e):
            x = p**sig
            return sum(
                bounded_partition_count(t, e, m) * x**t for t in range(e * m + 1)
            )

        note = (
            _RATE_NOTE
            + "; the predicted constant carries the 1/beta factor of the"
            " partial-summation main term"
        )
    else:
        raise ValueError(f"unknown kind {kind!r}")

    values = multiplicative_sieve(bound, local)
    checkpoints = sorted({c for c in (10**4, 10**5, 10**6) if c <= bound} | {bound})
    curve = []
    total = 0
    last = 1
    for cp in checkpoints:
        total += sum(values[n] for n in range(last, cp + 1))
        last = cp + 1
        curve.append((cp, total / (cp**beta * math.log(cp) ** alpha)))
    empirical = curve[-1][1]
    return AverageResult(
        kind, m, None if kind != "Z_at_sigma" else float(sigma),
        bound, beta, alpha, predicted, empirical, tuple(curve), note,
    )


@dataclass(frozen=True)
class EisensteinSeries:
    """q-series sum_{n>=1} Z^m_n(1-s) q^n, coefficients c_1..c_trunc.

    Slot 0 of coeffs is unused.  Entries are exact (int or Fraction) for
    integer s, complex otherwise; no normalization constants are applied.
    """

    m: int
    s: object
    trunc: int
    coeffs: tuple

    def __post_init__(self):
        if self.trunc < 1 or len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient tuple must have trunc+1 slots")
        if self.coeffs[1] != 1:
            raise ValueError("c_1 must be 1")

    def __getitem__(self, n: int):
        if not 1 <= n <= self.trunc:
            raise IndexError(f"index {n} outside 1..{self.trunc}")
        return self.coeffs[n]


def eisenstein_coeffs(m: int, s, trunc: int) -> EisensteinSeries:
    """Coefficients c_n = Z^m_n(1-s); exact when s is an integer.

    For m = 1 and integer s = k this is the divisor sum sigma_{k-1}(n), the
    classical weight-k coefficient sequence.
    """
    if m < 1 or trunc < 1:
        raise ValueError("need m >= 1 and trunc >= 1")
    if isinstance(s, int) and not isinstance(s, bool):
        coeffs = [0] + [eval_brute(n, m, 1 - s, exact=True) for n in range(1, trunc + 1)]
    else:
        w = 1 - complex(s)
        coeffs = [0] + [eval_brute(n, m, w) for n in range(1, trunc + 1)]
    return EisensteinSeries(m, s, trunc, tuple(coeffs))


def _sigma_complex(z: complex, n: int) -> complex:
    return sum(d**z for d in divisors(n))


def eisen1_check(s, trunc: int) -> bool:
    """Check sum_{d | n} sigma_s(d) d^s = Z^2_n(-s) for all n <= trunc.

    Exact comparison for integer s, 1e-9 relative tolerance otherwise.
    """
    if trunc < 1:
        raise ValueError("trunc must be >= 1")
    if isinstance(s, int) and not isinstance(s, bool):
        for n in range(1, trunc + 1):
            if s >= 0:
                lhs = sum(divisor_sigma(s, d) * d**s for d in divisors(n))
            else:
                lhs = sum(
                    divisor_sigma(s, d) * Fraction(1, d ** (-s)) for d in divisors(n)
                )
            if lhs != eval_brute(n, 2, -s, exact=True):
                return False
        return True
    z = complex(s)
    for n in range(1, trunc + 1):
        lhs = sum(_sigma_complex(z, d) * d**z for d in divisors(n))
        rhs = eval_brute(n, 2, -z)
        if abs(lhs - rhs) > 1e-9 * (1 + abs(rhs)):
            return False
    return True
