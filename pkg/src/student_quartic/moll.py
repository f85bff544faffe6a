"""
The quartic integral ``int_0^inf dx / (x^4 + 2 a x^2 + 1)^(m+1)`` for ``a > -1``.

Its value is ``(pi/2) P_m(a) / (2(a+1))^(m+1/2)`` with the polynomial
``P_m(a) = sum_j d_{j,m} a^j``.  The coefficients are available from two
independently coded formulas: the classical binomial sum
(:func:`d_classical`) and the one that falls out of the Student
convolution argument (:func:`d_derived`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError
from .rational import (
    RationalPolynomial,
    binomial,
    factorial,
    pochhammer,
    pochhammer_half,
)
from .student import beta_half, normalizer

__all__ = [
    "MollCoefficientTable",
    "QuarticIntegralSpec",
    "closed_form_value",
    "d_classical",
    "d_derived",
    "integral_from_convolution",
    "moll_polynomial",
    "quartic_integrand",
]


@dataclass(frozen=True)
class MollCoefficientTable:
    m: int
    d: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.d[j]


@dataclass(frozen=True)
class QuarticIntegralSpec:
    """Parameters of the integrand ``1 / (x^4 + 2 a x^2 + 1)^(m+1)``."""

    a: Union[float, Fraction]
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"m must be a nonnegative int, got {self.m!r}")
        if not math.isfinite(self.a):
            raise DomainError(f"a={self.a} is not finite")
        if not self.a > -1:
            raise DomainError(f"a={self.a} violates a > -1; the quartic integral diverges there")


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be a nonnegative int, got {m!r}")


def d_classical(m: int) -> MollCoefficientTable:
    """``d_{j,m} = 2^{-2m} sum_{i=j}^m 2^i C(2m-2i, m-i) C(m+i, m) C(i, j)``."""
    _check_m(m)
    d = []
    for j in range(m + 1):
        s = sum(
            2**i * binomial(2 * m - 2 * i, m - i) * binomial(m + i, m) * binomial(i, j)
            for i in range(j, m + 1)
        )
        d.append(Fraction(s, 4**m))
    return MollCoefficientTable(m, tuple(d))


def d_derived(m: int) -> MollCoefficientTable:
    """Coefficients from the convolution route:

    ``d_{j,m} = (1/2)_m / ((2m)!)^2 * sum_{i=j}^m (2m-2i)! (2m+2i)! C(m,i) C(i,j)
    / ((m+1/2)_i (m-i)! 2^i)``.
    """
    _check_m(m)
    front = pochhammer_half(m) / factorial(2 * m) ** 2
    inner = [
        Fraction(factorial(2 * m - 2 * i) * factorial(2 * m + 2 * i) * binomial(m, i),
                 factorial(m - i) * 2**i)
        / pochhammer(Fraction(2 * m + 1, 2), i)
        for i in range(m + 1)
    ]
    d = [front * sum((inner[i] * binomial(i, j) for i in range(j, m + 1)), Fraction(0)) for j in range(m + 1)]
    return MollCoefficientTable(m, tuple(d))


def moll_polynomial(m: int) -> RationalPolynomial:
    """``P_m(a) = sum_j d_{j,m} a^j``."""
    return RationalPolynomial(d_classical(m).d)


def closed_form_value(spec: QuarticIntegralSpec) -> float:
    """``(pi/2) P_m(a) / (2(a+1))^(m+1/2)`` with ``P_m(a)`` evaluated exactly."""
    # Fraction(float) is exact, so P_m sees the same a the caller passed
    a = Fraction(spec.a)
    p = float(moll_polynomial(spec.m)(a))
    s = float(2 * (a + 1))
    return math.pi / 2 * p / (s**spec.m * math.sqrt(s))


def quartic_integrand(spec: QuarticIntegralSpec, x: float) -> float:
    x2 = x * x
    # x2 * x2 saturates to inf instead of raising like x ** 4
    return (x2 * x2 + 2.0 * float(spec.a) * x2 + 1.0) ** -(spec.m + 1)


def integral_from_convolution(m: int, x: float) -> float:
    """Quartic integral at ``a = (1 - x^2/4) / (1 + x^2/4)`` via the self-convolution of ``f_{m+1/2}``.

    ``f * f (x) = 2 A^2 (1+x^2/4)^(-2m-3/2) I`` while also
    ``f * f (x) = sum_i beta_{m+i}^{(m,m)}(1/2)/2 * A_{m+i+1/2} / (1+x^2/4)^(m+i+1)``;
    solving for ``I`` uses only the mixture weights, not ``P_m``.
    """
    _check_m(m)
    u = 1.0 + x * x / 4.0
    a_m = normalizer(m)
    rhs = math.fsum(
        float(beta_half(m, i) / 2 * (normalizer(m + i) / a_m / a_m)) * u ** -(m + i + 1)
        for i in range(m + 1)
    )
    return rhs / (2.0 * u ** (-2 * m - 1.5))
