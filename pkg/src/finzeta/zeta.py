"""Finite multiple zeta values over divisor chains.

Z^m_N(s) sums (n_1 ... n_m)^{-s} over all chains n_1 | n_2 | ... | n_m | N.
Provided here: the brute Dirichlet-polynomial evaluation, the Euler-product
evaluation, the multivariable variant Z^gamma_N(t_1..t_m), the zero set on
the imaginary axis, and exact special values at negative integers.

Complex powers of a positive integer v are always exp(-s ln v) with the real
logarithm, so there is no branch ambiguity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import chain_count, divisor_chains, divisors, factorize
from .qpoly import Signature, gfun_finite


class EulerFactorSingularity(ArithmeticError):
    """A denominator 1 - p^{-sk} vanished without its matching numerator."""


# Both-vanish window for treating an Euler factor as removable.
_DEGENERATE_TOL = 1e-12


@lru_cache(maxsize=65536)
def chain_product_counts(N: int, m: int) -> dict[int, int]:
    """Multiset {chain product: count} over divisor_chains(N, m).

    Every key divides N^m.  Cached; callers must not mutate the dict.
    """
    counts: dict[int, int] = {}
    for chain in divisor_chains(N, m):
        v = math.prod(chain)
        counts[v] = counts.get(v, 0) + 1
    return counts


@lru_cache(maxsize=65536)
def _log_arrays(N: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    items = sorted(chain_product_counts(N, m).items())
    logs = np.log(np.array([v for v, _ in items], dtype=np.float64))
    cnts = np.array([c for _, c in items], dtype=np.float64)
    return logs, cnts


def eval_brute(N: int, m: int, s, exact: bool = False):
    """Z^m_N(s) by direct summation over divisor chains.

    exact=True needs integer s and returns an int (s <= 0) or Fraction
    (s > 0); otherwise returns complex.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if exact:
        if isinstance(s, bool) or not isinstance(s, int):
            raise TypeError("exact evaluation requires an integer s")
        counts = chain_product_counts(N, m)
        if s <= 0:
            return sum(c * v ** (-s) for v, c in counts.items())
        top = N**m
        scaled = sum(c * (top // v) ** s for v, c in counts.items())
        return Fraction(scaled, top**s)
    logs, cnts = _log_arrays(N, m)
    z = complex(s)
    return complex(np.sum(cnts * np.exp(-z * logs)))


def eval_euler(N: int, m: int, s, exact: bool = False):
    """Z^m_N(s) by the Euler product over p | N:

        prod_p prod_{k=1}^m (1 - p^{-s(e_p+k)}) / (1 - p^{-sk}).

    s = 0 short-circuits to the chain count prod_p C(e_p+m, m).  On the
    imaginary axis a factor whose numerator and denominator both vanish
    (within 1e-12) is replaced by its limit (e_p+k)/k; a denominator that
    vanishes alone raises EulerFactorSingularity.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    fact = factorize(N)
    if exact:
        if isinstance(s, bool) or not isinstance(s, int):
            raise TypeError("exact evaluation requires an integer s")
        if s == 0:
            return chain_count(N, m)
        total = Fraction(1)
        for p, e in fact:
            x = Fraction(1, p**s) if s > 0 else Fraction(p ** (-s))
            for k in range(1, m + 1):
                total *= (1 - x ** (e + k)) / (1 - x**k)
        return int(total) if total.denominator == 1 else total
    z = complex(s)
    if z == 0:
        return complex(chain_count(N, m))
    value = complex(1.0)
    for p, e in fact:
        lp = math.log(p)
        for k in range(1, m + 1):
            num = 1.0 - cmath.exp(-z * (e + k) * lp)
            den = 1.0 - cmath.exp(-z * k * lp)
            if abs(den) < _DEGENERATE_TOL:
                if abs(num) < _DEGENERATE_TOL:
                    value *= (e + k) / k
                    continue
                raise EulerFactorSingularity(
                    f"factor k={k} at p={p} is singular at s={z}"
                )
            value *= num / den
    return value


def special_value(N: int, m: int, n: int) -> int:
    """Exact integer Z^m_N(-n) for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return int(eval_brute(N, m, -n, exact=True))


# ---------------------------------------------------------------------------
# multivariable variant


def eval_multivar(gamma, N: int, t, method: str = "product") -> complex:
    """Z^gamma_N(t_1..t_m) = sum over n_m^{g_m} | ... | n_1^{g_1} | N of
    prod_j n_j^{-g_j t_j}.

    method="product" multiplies the per-prime chain polynomials at
    q_j = p^{-t_j}; method="direct" enumerates the integer chains.  The two
    must agree and are kept as separate routes.
    """
    sig = gamma if isinstance(gamma, Signature) else Signature(tuple(gamma))
    t = list(t)
    if len(t) != len(sig):
        raise ValueError("need one exponent per signature entry")
    if method == "product":
        value = complex(1.0)
        for p, e in factorize(N):
            lp = math.log(p)
            args = [cmath.exp(-complex(tj) * lp) for tj in t]
            value *= complex(_gfun_poly(sig.parts, e).evaluate(args))
        return value
    if method == "direct":
        return _multivar_direct(sig.parts, t, N)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=4096)
def _gfun_poly(parts: tuple[int, ...], e: int):
    return gfun_finite(Signature(parts), e)


def _multivar_direct(parts: tuple[int, ...], t: list, bound: int) -> complex:
    if not parts:
        return complex(1.0)
    c = parts[0]
    total = complex(0.0)
    for d in divisors(bound):
        dc = d**c
        if bound % dc == 0:
            inner = _multivar_direct(parts[1:], t[1:], dc)
            total += d ** (-c * complex(t[0])) * inner
    return total


# ---------------------------------------------------------------------------
# zeros on the imaginary axis


@dataclass(frozen=True)
class ZeroLocation:
    """A point s = 2*pi*i*n / ((e_p + k) log p) on the imaginary axis.

    multiplicity is the actual vanishing order of Z^m_N there.
    coincidence_count is the size of the coincidence set
    #{(l, j) : 1 <= l <= m, j != 0, (e_p+k) j = (e_p+l) n}, which counts
    vanishing numerator factors only; the denominator factors of the Euler
    product cancel all but at most one of them.
    """

    p: int
    k: int
    n: int
    s: complex
    multiplicity: int
    coincidence_count: int


def zero_multiplicity(N: int, m: int, p: int, k: int, n: int) -> int:
    """Size of the coincidence set

        #{(l, j) : 1 <= l <= m, j != 0, (ord_p N + k) j = (ord_p N + l) n}

    at the candidate point indexed by (p, k, n).  This counts coinciding
    numerator zeros of the Euler product; it is an upper bound for, not
    equal to, the vanishing order of Z^m_N (see predicted_zeros).
    """
    e = factorize(N).ord(p)
    if e == 0:
        raise ValueError(f"{p} does not divide {N}")
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    if n == 0:
        raise ValueError("need n != 0")
    count = 0
    for l in range(1, m + 1):
        j, rem = divmod((e + l) * n, e + k)
        if rem == 0 and j != 0:
            count += 1
    return count


def _order_counts(e: int, m: int, den: int) -> tuple[int, int]:
    """(numerator zeros, denominator zeros) of the p-factor at the point
    with reduced frequency denominator den."""
    up = sum(1 for l in range(1, m + 1) if (e + l) % den == 0)
    down = sum(1 for l in range(1, m + 1) if l % den == 0)
    return up, down


def predicted_zeros(
    N: int, m: int, height: float, include_order_zero: bool = False
) -> list[ZeroLocation]:
    """All zeros of Z^m_N with |Im s| <= height, each tagged with its order.

    Candidate points are s = 2*pi*i*n/((e_p+k) log p); distinct (k, n) pairs
    with the same reduced ratio n/(e_p+k) are the same point and are merged
    (coincidences across different primes are impossible).  The actual order
    at a candidate is (numerator zeros) - (denominator zeros) of the
    p-factor; candidates where that difference is 0 are not zeros at all and
    are dropped unless include_order_zero is set.  The attached (k, n) is the
    representative with the smallest k.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if height <= 0:
        raise ValueError("height must be positive")
    out: list[ZeroLocation] = []
    for p, e in factorize(N):
        lp = math.log(p)
        ratios: set[Fraction] = set()
        for k in range(1, m + 1):
            n_max = int(height * (e + k) * lp / (2 * math.pi))
            for n in range(1, n_max + 1):
                ratios.add(Fraction(n, e + k))
        for r in ratios:
            t = 2 * math.pi * float(r) / lp
            if t > height:
                continue
            den = r.denominator
            up, down = _order_counts(e, m, den)
            order = up - down
            if order < 1 and not include_order_zero:
                continue
            k_rep = next(l for l in range(1, m + 1) if (e + l) % den == 0)
            n_rep = int(r * (e + k_rep))
            for sign in (1, -1):
                out.append(
                    ZeroLocation(
                        p, k_rep, sign * n_rep, complex(0.0, sign * t), order, up
                    )
                )
    out.sort(key=lambda z: (z.s.imag, z.p))
    return out


# ---------------------------------------------------------------------------
# numeric scans used by the zero checks


def grid_min_abs(N: int, m: int, sigmas, ts, chunk: int = 1024) -> float:
    """min |Z^m_N(sigma + it)| over the rectangular grid sigmas x ts.

    Separates v^{-sigma-it} into a real amplitude matrix and an oscillatory
    matrix, so the whole grid is two matrix products per chunk of t values.
    """
    logs, cnts = _log_arrays(N, m)
    sig = np.asarray(sigmas, dtype=np.float64)
    tvals = np.asarray(ts, dtype=np.float64)
    amp = cnts[None, :] * np.exp(-np.outer(sig, logs))
    best = math.inf
    for i in range(0, len(tvals), chunk):
        osc = np.exp(-1j * np.outer(logs, tvals[i : i + chunk]))
        best = min(best, float(np.abs(amp @ osc).min()))
    return best


def circle_order_estimate(
    N: int, m: int, center: complex, radius: float = 1e-3, n_angles: int = 16
) -> float:
    """Estimate the vanishing order of Z^m_N at center.

    Compares |Z| on circles of radius r and r/2: for an order-d zero the
    ratio is close to 2^d, so log2 of the ratio, averaged over angles,
    estimates d (0 for a non-zero).
    """
    total = 0.0
    for j in range(n_angles):
        w = cmath.exp(2 * math.pi * 1j * j / n_angles)
        outer_v = abs(eval_brute(N, m, center + radius * w))
        inner_v = abs(eval_brute(N, m, center + 0.5 * radius * w))
        total += math.log2(outer_v / inner_v)
    return total / n_angles
