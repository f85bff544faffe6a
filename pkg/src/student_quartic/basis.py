"""
The polynomial basis ``q_k`` behind Student convolutions.

The characteristic function of the half-integer Student density
``f_{k+1/2}(x) = A / (1 + x^2)^(k+1)`` is ``exp(-|t|) q_k(|t|)`` with

    q_k(t) = sum_j (2k-j)! k! 2^j / ((2k)! (k-j)! j!) t^j,

a normalized reverse Bessel polynomial.  A scaled density ``f(x/a)/a`` has
characteristic function ``exp(-a|t|) q_k(a|t|)``, so the convolution of two
scaled densities with ``a + (1-a) = 1`` is a mixture of ``f_{k+1/2}`` whose
weights are the coordinates of ``q_n(a t) q_m((1-a) t)`` in this basis.
Since ``deg q_k = k`` those coordinates come out of a triangular solve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rational import RationalPolynomial, factorial

__all__ = [
    "BasisPolynomial",
    "basis_coefficient",
    "basis_poly",
    "characteristic_function",
    "decompose_in_basis",
    "recombine",
]


@dataclass(frozen=True)
class BasisPolynomial:
    k: int
    poly: RationalPolynomial

    def __post_init__(self):
        if self.poly.degree != self.k:
            raise ValueError(f"q_{self.k} must have degree {self.k}, got {self.poly.degree}")

    @property
    def leading_coefficient(self) -> Fraction:
        return self.poly.leading_coefficient


def basis_coefficient(k: int, j: int) -> Fraction:
    """Coefficient of ``t**j`` in ``q_k``; zero outside ``0 <= j <= k``."""
    if j < 0 or j > k:
        return Fraction(0)
    num = factorial(2 * k - j) * factorial(k) * 2**j
    den = factorial(2 * k) * factorial(k - j) * factorial(j)
    return Fraction(num, den)


@lru_cache(maxsize=None)
def basis_poly(k: int) -> BasisPolynomial:
    """Return ``q_k`` with exact coefficients."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"basis order must be a nonnegative int, got {k!r}")
    return BasisPolynomial(k, RationalPolynomial(basis_coefficient(k, j) for j in range(k + 1)))


def decompose_in_basis(p: RationalPolynomial, k_max: int) -> list[Fraction]:
    """Coordinates ``(c_0, ..., c_k_max)`` with ``p = sum_k c_k q_k``.

    Back-substitution from the top degree: the residual's degree-``k``
    coefficient divided by the leading coefficient of ``q_k`` gives ``c_k``.
    """
    if p.degree > k_max:
        raise ValueError(f"polynomial of degree {p.degree} does not fit in q_0..q_{k_max}")
    residual = list(p.coefficients) + [Fraction(0)] * (k_max + 1 - len(p.coefficients))
    out = [Fraction(0)] * (k_max + 1)
    for k in range(p.degree, -1, -1):
        top = residual[k]
        if top == 0:
            continue
        q = basis_poly(k).poly.coefficients
        c = top / q[k]
        out[k] = c
        residual[k] = Fraction(0)
        for j in range(k):
            residual[j] -= c * q[j]
    return out


def recombine(coefficients) -> RationalPolynomial:
    """Inverse of :func:`decompose_in_basis`: ``sum_k c_k q_k``."""
    total = RationalPolynomial()
    for k, c in enumerate(coefficients):
        if c:
            total = total + basis_poly(k).poly * c
    return total


def characteristic_function(k: int, t: float) -> float:
    """``exp(-|t|) q_k(|t|)`` in floating point."""
    s = abs(t)
    acc = 0.0
    for c in reversed(basis_poly(k).poly.coefficients):
        acc = acc * s + float(c)
    return math.exp(-s) * acc
