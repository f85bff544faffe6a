"""
Exact rational scalars, combinatorial primitives and dense polynomials.

Rationals are :class:`fractions.Fraction` instances (always normalized, with
a positive denominator).  Polynomials are immutable and store their
coefficients low degree first with trailing zeros trimmed, so the zero
polynomial has no coefficients at all.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "BigRational",
    "FACTORIAL_CAP",
    "RationalPolynomial",
    "as_rational",
    "binomial",
    "factorial",
    "format_rational",
    "parse_rational",
    "pochhammer",
    "pochhammer_half",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_scale",
]

BigRational = Fraction

FACTORIAL_CAP = 10_000

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to a Fraction; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _check_count(name: str, n: int, cap: int | None) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")
    limit = FACTORIAL_CAP if cap is None else cap
    if n > limit:
        raise ValueError(f"{name}={n} exceeds the argument cap {limit}")


def factorial(n: int, cap: int | None = None) -> int:
    """Return ``n!`` for ``0 <= n <= cap`` (default :data:`FACTORIAL_CAP`)."""
    _check_count("n", n, cap)
    return math.factorial(n)


def binomial(n: int, k: int, cap: int | None = None) -> int:
    """Binomial coefficient, zero when ``k < 0`` or ``k > n``."""
    _check_count("n", n, cap)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x: RationalLike, i: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+i-1)``; equals 1 for ``i == 0``."""
    _check_count("i", i, None)
    x = as_rational(x)
    out = Fraction(1)
    for r in range(i):
        out *= x + r
    return out


def pochhammer_half(m: int) -> Fraction:
    """``(1/2)_m = (2m)! / (4^m m!)``."""
    return pochhammer(Fraction(1, 2), m)


def format_rational(value: RationalLike) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when ``q == 1``."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string.

    Decimal notation is rejected on purpose: it would silently round.

    >>> parse_rational("6/4")
    Fraction(3, 2)
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not an exact rational (expected P/Q or an integer): {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coefficients[j]`` is the coefficient of ``t**j``.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        c = [as_rational(v) for v in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "RationalPolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, v in enumerate(b):
            out[j] += v
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self._c)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self._c or not other._c:
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
            for i, u in enumerate(self._c):
                if u == 0:
                    continue
                for j, v in enumerate(other._c):
                    out[i + j] += u * v
            return RationalPolynomial(out)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPolynomial(c * other for c in self._c)
        return NotImplemented

    __rmul__ = __mul__

    def scale_argument(self, factor: RationalLike) -> "RationalPolynomial":
        """Return the polynomial ``t -> p(factor * t)``."""
        factor = as_rational(factor)
        out = []
        power = Fraction(1)
        for c in self._c:
            out.append(c * power)
            power *= factor
        return RationalPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        inner = ", ".join(format_rational(c) for c in self._c)
        return f"RationalPolynomial([{inner}])"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        terms = []
        for j, c in enumerate(self._c):
            if c == 0:
                continue
            coef = format_rational(c)
            if j == 0:
                terms.append(coef)
            else:
                mono = var if j == 1 else f"{var}^{j}"
                terms.append(mono if c == 1 else f"{coef}*{mono}")
        return " + ".join(terms)


def poly_eval(p: RationalPolynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    return p(as_rational(x))


def poly_add(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    return p + q


def poly_mul(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    return p * q


def poly_scale(p: RationalPolynomial, c: RationalLike) -> RationalPolynomial:
    """Multiply every coefficient by ``c``."""
    return p * as_rational(c)

