"""
Verification suites run by ``student-quartic verify``.

Every suite returns a list of :class:`Check`.  Formula implementations are
looked up through their modules at call time, so a patched implementation
is what gets verified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import basis, moll, quadrature, student
from .quadrature import QuadratureConfig

__all__ = [
    "Check",
    "SUITES",
    "conv_suite",
    "exact_suite",
    "fourier_suite",
    "quartic_suite",
    "run_suites",
]

QUARTIC_A = (-0.9, -0.5, 0.0, 0.5, 1.0, 3.0, 10.0)
QUARTIC_M = range(11)
CONV_ORDERS = ((0, 0), (1, 0), (1, 1), (2, 1), (3, 3))
CONV_A = (Fraction(1, 3), Fraction(1, 2))
CONV_X = (0.0, 0.7, 2.5)
FOURIER_K = range(5)
FOURIER_T = (0.25, 1.0, 3.0)
SUBSTITUTION_X = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _rel_close(got: float, want: float, tol: float) -> tuple[bool, float]:
    diff = abs(got - want)
    return diff <= max(tol, tol * abs(want)), diff


def exact_suite() -> list[Check]:
    """Bit-exact identities between independently coded formulas."""
    checks = []
    for m in range(31):
        ok = moll.d_classical(m) == moll.d_derived(m)
        checks.append(Check(f"d_classical==d_derived m={m}", ok))
    for m in range(31):
        bad = [i for i in range(m + 1) if student.beta_equal_orders(m, i, Fraction(1, 2)) != student.beta_half(m, i)]
        checks.append(Check(f"beta_equal_orders(a=1/2)==beta_half m={m}", not bad, f"mismatch at i={bad}" if bad else ""))
    for a in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        bad = []
        for m in range(16):
            table = student.beta_general(m, m, a)
            bad += [(m, i) for i in range(m + 1) if table[m + i] != student.beta_equal_orders(m, i, a)]
        checks.append(Check(f"beta_general==beta_equal_orders a={a} m<=15", not bad, f"mismatch at {bad[:5]}" if bad else ""))
    for a in (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), Fraction(7, 10)):
        bad = [(n, m) for n in range(1, 13) for m in range(1, 13) if not student.check_recursion(n, m, a)]
        checks.append(Check(f"recursion a={a} n,m<=12", not bad, f"fails at {bad[:5]}" if bad else ""))
    for a in (Fraction(1, 5), Fraction(2, 5)):
        bad = [
            (n, m)
            for n in range(13)
            for m in range(13)
            if student.apply_symmetry(student.beta_general(n, m, a)) != student.beta_general(m, n, 1 - a)
        ]
        checks.append(Check(f"symmetry a={a} n,m<=12", not bad, f"fails at {bad[:5]}" if bad else ""))
    for p in range(1, 10):
        a = Fraction(p, 10)
        negative, unnormalized = [], []
        for n in range(31):
            for m in range(31 - n):
                table = student.beta_general(n, m, a)
                if not table.is_nonnegative():
                    negative.append((n, m))
                if table.total() != 1:
                    unnormalized.append((n, m))
        detail = "; ".join(
            s for s in (f"negative at {negative[:5]}" if negative else "",
                        f"sum != 1 at {unnormalized[:5]}" if unnormalized else "") if s
        )
        checks.append(Check(f"beta nonnegative and normalized a={a} n+m<=30", not (negative or unnormalized), detail))
    return checks


def quartic_suite(tol: float = 1e-10, cfg: QuadratureConfig | None = None) -> list[Check]:
    """Closed form against quadrature, plus the convolution-chain evaluation."""
    checks = []
    for m in QUARTIC_M:
        for a in QUARTIC_A:
            spec = moll.QuarticIntegralSpec(a, m)
            want = moll.closed_form_value(spec)
            res = quadrature.integrate_half_line(lambda x: moll.quartic_integrand(spec, x), cfg)
            ok, diff = _rel_close(res.value, want, tol)
            ok = ok and res.converged
            checks.append(Check(f"quartic m={m} a={a}", ok,
                                f"closed={want!r} quad={res.value!r} diff={diff:.3e} est={res.error_estimate:.3e}"))
    for m in range(11):
        for x in SUBSTITUTION_X:
            a = (1 - x * x / 4) / (1 + x * x / 4)
            want = moll.closed_form_value(moll.QuarticIntegralSpec(a, m))
            got = moll.integral_from_convolution(m, x)
            ok, diff = _rel_close(got, want, tol)
            checks.append(Check(f"substitution chain m={m} x={x}", ok, f"closed={want!r} chain={got!r} diff={diff:.3e}"))
    return checks


def conv_suite(tol: float = 1e-8, cfg: QuadratureConfig | None = None) -> list[Check]:
    """Numeric convolution of scaled densities against the exact mixture."""
    checks = []
    for n, m in CONV_ORDERS:
        for a in CONV_A:
            table = student.beta_general(n, m, a)
            for x in CONV_X:
                want = table.mixture_value(x)
                res = quadrature.convolution_lhs(n, m, float(a), x, cfg)
                diff = abs(res.value - want)
                checks.append(Check(f"convolution n={n} m={m} a={a} x={x}", diff <= tol and res.converged,
                                    f"mixture={want!r} quad={res.value!r} diff={diff:.3e}"))
    for m in range(4):
        for x in SUBSTITUTION_X:
            f = student.StudentDensity(m)
            res = quadrature.integrate_real_line(lambda y: f(y) * f(x - y), cfg, breakpoints=(x,))
            want = math.fsum(
                float(student.beta_half(m, i)) / 2 * student.StudentDensity(m + i)(x / 2) for i in range(m + 1)
            )
            diff = abs(res.value - want)
            checks.append(Check(f"self-convolution m={m} x={x}", diff <= tol and res.converged,
                                f"mixture={want!r} quad={res.value!r} diff={diff:.3e}"))
    return checks


def fourier_suite(tol: float = 1e-9, cfg: QuadratureConfig | None = None) -> list[Check]:
    """Numeric characteristic function of ``f_{k+1/2}`` against ``exp(-t) q_k(t)``."""
    checks = []
    for k in FOURIER_K:
        f = student.StudentDensity(k)
        for t in FOURIER_T:
            res = quadrature.integrate_cosine_transform(f, t, cfg)
            got = 2.0 * res.value
            want = basis.characteristic_function(k, t)
            diff = abs(got - want)
            checks.append(Check(f"characteristic function k={k} t={t}", diff <= tol and res.converged,
                                f"basis={want!r} quad={got!r} diff={diff:.3e}"))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "exact": exact_suite,
    "quartic": quartic_suite,
    "conv": conv_suite,
    "fourier": fourier_suite,
}


def run_suites(names, tol: float | None = None, cfg: QuadratureConfig | None = None) -> list[Check]:
    checks = []
    for name in names:
        suite = SUITES[name]
        if name == "exact":
            checks += suite()
        elif tol is None:
            checks += suite(cfg=cfg)
        else:
            checks += suite(tol=tol, cfg=cfg)
    return checks
