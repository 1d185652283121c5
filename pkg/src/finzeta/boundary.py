"""Unitarity classification of G_{k,l}(T) = 1 - T + T^{lk+1} - T^{k(l+1)}.

A polynomial in 1 + T C[T] is unitary when all its roots lie on the unit
circle.  Unitary G_{k,l} means the Dirichlet series with local factor
H_{k,l}(p^{-s}) continues meromorphically to the whole plane; a root off the
circle pins the natural boundary Re s = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# ||root| - 1| below this counts as on the unit circle; genuinely off-circle
# roots of these small integer polynomials sit far outside the window.
UNIT_TOL = 1e-8

_MAX_ITER = 500
_CONVERGE_TOL = 1e-14


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, constant term first, nonzero leading coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def deriv(self) -> "IntPoly":
        if self.degree == 0:
            raise ValueError("constant polynomial has no useful derivative here")
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def mul(self, other: "IntPoly") -> "IntPoly":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))


def build_G(k: int, l: int) -> IntPoly:
    """1 - T + T^{lk+1} - T^{k(l+1)}; exponent collisions collapse (k = 1
    leaves just 1 - T)."""
    if k < 1 or l < 1:
        raise ValueError("need k, l >= 1")
    coeffs = [0] * (k * (l + 1) + 1)
    coeffs[0] += 1
    coeffs[1] -= 1
    coeffs[l * k + 1] += 1
    coeffs[k * (l + 1)] -= 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return IntPoly(tuple(coeffs))


def factor_H(k: int, l: int) -> IntPoly:
    """H_{k,l}(T) = 1 + (T^k - T) sum_{j=0}^{l-1} T^{kj}, the cofactor of
    (1 - T^k) in G_{k,l}.  The product identity is asserted, not assumed."""
    if k < 1 or l < 1:
        raise ValueError("need k, l >= 1")
    coeffs = [0] * (k * l + 1)
    coeffs[0] += 1
    for j in range(l):
        coeffs[k + k * j] += 1
        coeffs[1 + k * j] -= 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    h = IntPoly(tuple(coeffs))
    one_minus_tk = IntPoly(tuple([1] + [0] * (k - 1) + [-1]))
    if one_minus_tk.mul(h) != build_G(k, l):
        raise ArithmeticError(f"(1 - T^{k}) * H != G at k={k}, l={l}")
    return h


def poly_roots(poly: IntPoly) -> list[complex]:
    """All complex roots by Aberth-Ehrlich simultaneous iteration plus a
    Newton polish.  Non-convergence or a residual above 1e-10 times the
    coefficient scale is a hard error."""
    if poly.degree < 1:
        raise ValueError("need degree >= 1")
    c = np.array(poly.coeffs, dtype=np.complex128)
    d = poly.degree
    dc = c[1:] * np.arange(1, d + 1)

    def val(z):
        out = np.zeros_like(z)
        for coef in c[::-1]:
            out = out * z + coef
        return out

    def dval(z):
        out = np.zeros_like(z)
        for coef in dc[::-1]:
            out = out * z + coef
        return out

    radius = 1.0 + float(np.abs(c[:-1]).max()) / abs(poly.coeffs[-1])
    angles = 2.0 * np.pi * (np.arange(d) + 0.37) / d
    z = 0.9 * radius * np.exp(1j * angles)

    for _ in range(_MAX_ITER):
        w = val(z) / dval(z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        pair_sum = (1.0 / diff).sum(axis=1)
        step = w / (1.0 - w * pair_sum)
        z = z - step
        if float(np.abs(step).max()) < _CONVERGE_TOL * (1.0 + float(np.abs(z).max())):
            break
    else:
        raise RuntimeError(f"root iteration did not converge for {poly.coeffs}")

    for _ in range(3):
        z = z - val(z) / dval(z)

    scale = float(np.abs(c).max())
    worst = float(np.abs(val(z)).max())
    if worst > 1e-10 * scale:
        raise RuntimeError(f"root residual {worst:.3g} too large for {poly.coeffs}")
    roots = sorted(map(complex, z), key=lambda r: (round(r.real, 12), round(r.imag, 12)))
    return roots


@dataclass(frozen=True)
class UnitarityVerdict:
    k: int
    l: int
    unitary: bool
    roots: tuple[complex, ...]
    witness: complex | None
    conclusion: str


def classify(k: int, l: int) -> UnitarityVerdict:
    """Unitarity verdict on G_{k,l} and the resulting continuation statement
    for the step-powerful Dirichlet series."""
    roots = poly_roots(build_G(k, l))
    off = [abs(abs(r) - 1.0) for r in roots]
    unitary = max(off) <= UNIT_TOL
    witness = None if unitary else roots[off.index(max(off))]
    conclusion = (
        "extends to a meromorphic function on C"
        if unitary
        else "meromorphic on Re(s) > 0 with natural boundary Re(s) = 0"
    )
    return UnitarityVerdict(k, l, unitary, tuple(roots), witness, conclusion)
