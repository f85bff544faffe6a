"""
Half-integer Student t-densities and their convolution coefficients.

For ``nu = m + 1/2`` the density is ``f(x) = A / (1 + x^2)^(m+1)`` with
``A = 4^m (m!)^2 / (pi (2m)!)``; it has ``2m + 1`` degrees of freedom.

For ``0 < a < 1`` the convolution of ``f_{n+1/2}(x/a)/a`` with
``f_{m+1/2}(x/(1-a))/(1-a)`` is a finite mixture
``sum_{k=min(n,m)}^{n+m} beta_k f_{k+1/2}(x)``.  :func:`beta_general`
computes the weights for any ``(n, m)`` through the ``q_k`` basis; the
closed forms for ``n == m`` and the symmetry and recursion identities are
kept as independent cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .basis import basis_poly, decompose_in_basis
from .errors import DomainError
from .rational import RationalLike, as_rational, binomial, factorial

__all__ = [
    "BetaTable",
    "PiScaledRational",
    "StudentDensity",
    "apply_symmetry",
    "beta_equal_orders",
    "beta_general",
    "beta_half",
    "check_recursion",
    "density_value",
    "normalizer",
]


@dataclass(frozen=True)
class PiScaledRational:
    """The exact number ``r * pi**pi_exponent`` with ``pi_exponent`` in {-1, 0, 1}."""

    r: Fraction
    pi_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "r", as_rational(self.r))
        if self.pi_exponent not in (-1, 0, 1):
            raise ValueError(f"pi exponent {self.pi_exponent} outside {{-1, 0, 1}}")
        if self.r == 0 and self.pi_exponent != 0:
            object.__setattr__(self, "pi_exponent", 0)

    def _coerce(self, other) -> "PiScaledRational":
        if isinstance(other, PiScaledRational):
            return other
        return PiScaledRational(as_rational(other), 0)

    def __mul__(self, other) -> "PiScaledRational":
        other = self._coerce(other)
        return PiScaledRational(self.r * other.r, self.pi_exponent + other.pi_exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PiScaledRational":
        other = self._coerce(other)
        return PiScaledRational(self.r / other.r, self.pi_exponent - other.pi_exponent)

    def __float__(self) -> float:
        return float(self.r) * math.pi**self.pi_exponent

    def __str__(self) -> str:
        suffix = {-1: "/pi", 0: "", 1: "*pi"}[self.pi_exponent]
        return f"{self.r}{suffix}"


def normalizer(m: int) -> PiScaledRational:
    """``A_{m+1/2} = Gamma(m+1) / (Gamma(1/2) Gamma(m+1/2)) = 4^m (m!)^2 / (pi (2m)!)``."""
    return PiScaledRational(Fraction(4**m * factorial(m) ** 2, factorial(2 * m)), -1)


@dataclass(frozen=True)
class StudentDensity:
    """Student t-density with parameter ``nu = m + 1/2``."""

    m: int
    normalizer: PiScaledRational = field(init=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"m must be a nonnegative int, got {self.m!r}")
        object.__setattr__(self, "normalizer", normalizer(self.m))

    @property
    def nu(self) -> Fraction:
        return Fraction(2 * self.m + 1, 2)

    @property
    def degrees_of_freedom(self) -> int:
        return 2 * self.m + 1

    def __call__(self, x: float) -> float:
        return density_value(self, x)


def density_value(d: StudentDensity, x: float) -> float:
    return float(d.normalizer) * (1.0 + x * x) ** -(d.m + 1)


@dataclass(frozen=True)
class BetaTable:
    """Mixture weights ``beta_k^{(n,m)}(a)`` for ``k = min(n,m) .. n+m``."""

    n: int
    m: int
    a: Fraction
    coefficients: Mapping[int, Fraction]

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients.get(k, Fraction(0))

    @property
    def k_range(self) -> range:
        return range(min(self.n, self.m), self.n + self.m + 1)

    def total(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.coefficients.values())

    def mixture_value(self, x: float) -> float:
        """``sum_k beta_k f_{k+1/2}(x)`` in floating point."""
        return math.fsum(float(b) * density_value(StudentDensity(k), x) for k, b in sorted(self.coefficients.items()))


def _open_unit(a: RationalLike) -> Fraction:
    a = as_rational(a)
    if not 0 < a < 1:
        raise DomainError(f"a={a} violates 0 < a < 1 required by the convolution expansion")
    return a


@lru_cache(maxsize=None)
def _beta_coefficients(n: int, m: int, a: Fraction) -> tuple[Fraction, ...]:
    product = basis_poly(n).poly.scale_argument(a) * basis_poly(m).poly.scale_argument(1 - a)
    return tuple(decompose_in_basis(product, n + m))


def beta_general(n: int, m: int, a: RationalLike) -> BetaTable:
    """Convolution weights for arbitrary nonnegative ``n, m`` and ``0 < a < 1``."""
    for name, v in (("n", n), ("m", m)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{name} must be a nonnegative int, got {v!r}")
    a = _open_unit(a)
    coeffs = _beta_coefficients(n, m, a)
    low = min(n, m)
    if any(coeffs[:low]):
        raise ArithmeticError(f"nonzero weight below index {low} for (n, m)=({n}, {m}), a={a}")
    return BetaTable(n, m, a, MappingProxyType({k: coeffs[k] for k in range(low, n + m + 1)}))


def beta_equal_orders(m: int, i: int, a: RationalLike) -> Fraction:
    """Closed form of ``beta_{m+i}^{(m,m)}(a)`` for ``0 <= i <= m``."""
    if not 0 <= i <= m:
        raise IndexError(f"i={i} outside 0..{m}")
    a = _open_unit(a)
    scale = (4 * a * (1 - a)) ** i * Fraction(factorial(m), factorial(2 * m)) ** 2 / 4**m
    ratio = Fraction(
        factorial(2 * m - 2 * i) * factorial(2 * m + 2 * i), factorial(m - i) * factorial(m + i)
    )
    u = (2 * a - 1) ** 2
    s = sum(
        (binomial(2 * m + 1, 2 * j) * binomial(m - j, i) * u**j for j in range(m - i + 1)),
        Fraction(0),
    )
    return scale * ratio * s


def beta_half(m: int, i: int) -> Fraction:
    """Closed form of ``beta_{m+i}^{(m,m)}(1/2)``."""
    if not 0 <= i <= m:
        raise IndexError(f"i={i} outside 0..{m}")
    scale = Fraction(factorial(m), factorial(2 * m)) ** 2 / 4**m
    ratio = Fraction(
        factorial(2 * m - 2 * i) * factorial(2 * m + 2 * i), factorial(m - i) * factorial(m + i)
    )
    return scale * ratio * binomial(m, i)


def apply_symmetry(t: BetaTable) -> BetaTable:
    """Relabel a table for ``(n, m, a)`` as the table for ``(m, n, 1 - a)``."""
    return BetaTable(t.m, t.n, 1 - t.a, t.coefficients)


def check_recursion(n: int, m: int, a: RationalLike) -> bool:
    """Exact test of
    ``beta_{k+1}^{(n,m)} / (2k+1) = a^2/(2n-1) beta_k^{(n-1,m)} + (1-a)^2/(2m-1) beta_k^{(n,m-1)}``
    over every ``k`` where some term can be nonzero; missing indices count as 0.
    """
    if n < 1 or m < 1:
        raise ValueError("recursion needs n >= 1 and m >= 1")
    a = _open_unit(a)
    full = beta_general(n, m, a)
    left_drop = beta_general(n - 1, m, a)
    right_drop = beta_general(n, m - 1, a)
    wa = a * a / (2 * n - 1)
    wb = (1 - a) ** 2 / (2 * m - 1)
    for k in range(n + m + 1):
        if full[k + 1] / (2 * k + 1) != wa * left_drop[k] + wb * right_drop[k]:
            return False
    return True
