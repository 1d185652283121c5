"""Prime factorization, divisor chains, and multiplicative-function plumbing.

Everything here is exact integer (or Fraction) arithmetic.  Divisor chains
n_1 | n_2 | ... | n_m | N are enumerated prime by prime as exponent chains
0 <= j_1 <= ... <= j_m <= ord_p(N) and recombined by products, so the full
divisor lattice of N^m is never materialized.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache, reduce
from typing import Callable, Iterable, Iterator

MAX_INPUT = 1 << 63

_TRIAL_BOUND = 1 << 16

# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@cache
def _small_primes() -> tuple[int, ...]:
    return tuple(primes(_TRIAL_BOUND))


def primes(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test for n < 2**63."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.

    The polynomial offset c walks 1, 2, 3, ... so the whole routine is
    deterministic.
    """
    if n % 2 == 0:
        return 2
    for c in itertools.count(1):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle collapsed for this c, retry with the next offset


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as an ordered tuple of (prime, exponent) pairs.

    The empty tuple represents n = 1.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.entries:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"bad factorization entry ({p}, {e})")
            last = p

    @property
    def n(self) -> int:
        out = 1
        for p, e in self.entries:
            out *= p**e
        return out

    def ord(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Factor 1 <= n < 2**63 into primes.

    Trial division up to 2**16, then Miller-Rabin plus Pollard rho for what
    remains.  Rejects n < 1 and n >= 2**63.
    """
    if not isinstance(n, int):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1 or n >= MAX_INPUT:
        raise ValueError(f"n must satisfy 1 <= n < 2**63, got {n}")
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        d = _pollard_rho(v)
        stack.append(d)
        stack.append(v // d)
    return Factorization(tuple(sorted(out.items())))


def _coerce(N) -> Factorization:
    return N if isinstance(N, Factorization) else factorize(N)


def divisors(N) -> list[int]:
    """Sorted divisors of N (int or Factorization)."""
    fact = _coerce(N)
    out = [1]
    for p, e in fact:
        out = [d * p**j for d in out for j in range(e + 1)]
    return sorted(out)


def _exponent_chains(e: int, m: int) -> Iterator[tuple[int, ...]]:
    # nondecreasing tuples (j_1, ..., j_m) with j_m <= e, ordered by the
    # last coordinate first
    if m == 0:
        yield ()
        return
    for top in range(e + 1):
        for prefix in _exponent_chains(top, m - 1):
            yield prefix + (top,)


def divisor_chains(N, m: int) -> Iterator[tuple[int, ...]]:
    """Yield every chain (n_1, ..., n_m) with n_1 | n_2 | ... | n_m | N.

    The number of chains is prod_p binom(ord_p(N) + m, m).  Chains are built
    per prime and recombined, keeping memory proportional to the per-prime
    chain lists rather than the total count.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    fact = _coerce(N)
    per_prime = [
        [tuple(p**j for j in ch) for ch in _exponent_chains(e, m)] for p, e in fact
    ]
    for combo in itertools.product(*per_prime):
        yield tuple(math.prod(c[i] for c in combo) for i in range(m))


def chain_count(N, m: int) -> int:
    """prod_p binom(ord_p(N) + m, m), the number of divisor chains."""
    fact = _coerce(N)
    return math.prod(math.comb(e + m, m) for _, e in fact)


def sigma(k: int, N) -> int | Fraction:
    """Divisor power sum sigma_k(N) = sum_{d | N} d^k, exact.

    Integer for k >= 0, Fraction for k < 0 (sigma_{-k}(N) / N^k).
    """
    fact = _coerce(N)
    if k < 0:
        return Fraction(sigma(-k, fact), fact.n ** (-k))
    if k == 0:
        return math.prod(e + 1 for _, e in fact)
    return math.prod((p ** (k * (e + 1)) - 1) // (p**k - 1) for p, e in fact)


def mobius(n: int) -> int:
    fact = factorize(n)
    if any(e > 1 for _, e in fact):
        return 0
    return -1 if len(fact) % 2 else 1


def multiplicative_lift(local: Callable[[int, int], object], N):
    """Evaluate prod_p local(p, ord_p(N)) over the factorization of N.

    local may return ints, Fractions, floats, complex numbers, or anything
    else that multiplies; the empty product is 1.
    """
    fact = _coerce(N)
    return reduce(lambda acc, pe: acc * local(pe[0], pe[1]), fact.entries, 1)


@cache
def bounded_partition_count(total: int, max_part: int, max_len: int | None = None) -> int:
    """Number of partitions of total with parts <= max_part and at most
    max_len parts (max_len=None means unbounded length)."""
    if total < 0:
        return 0
    if total == 0:
        return 1
    if max_len is None:
        max_len = total
    if max_part <= 0 or max_len <= 0:
        return 0
    # split on whether a part equal to max_part is used
    return bounded_partition_count(total, max_part - 1, max_len) + bounded_partition_count(
        total - max_part, max_part, max_len - 1
    )


def spf_sieve(limit: int) -> list[int]:
    """Smallest-prime-factor table for 0..limit (spf[1] = 1)."""
    import numpy as np

    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.flatnonzero(spf == 0)
    spf[idx] = idx
    spf[1] = 1
    return spf.tolist()


def multiplicative_sieve(limit: int, local: Callable[[int, int], object], one=1) -> list:
    """Values of the multiplicative function with prime-power data local(p, e)
    for all n in 0..limit (index 0 set to `one` and unused)."""
    spf = spf_sieve(limit)
    vals = [one] * (limit + 1)
    cache_pe: dict[tuple[int, int], object] = {}
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        e = 1
        while m % p == 0:
            m //= p
            e += 1
        key = (p, e)
        loc = cache_pe.get(key)
        if loc is None:
            loc = local(p, e)
            cache_pe[key] = loc
        vals[n] = vals[m] * loc
    return vals
