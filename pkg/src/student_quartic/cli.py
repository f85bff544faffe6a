"""
Command-line interface.

Usage:
    student-quartic quartic --m 1 --a 0 --verify
    student-quartic moll-d --m 3 --format csv
    student-quartic moll-poly --m 2
    student-quartic beta --n 2 --m 1 --a 1/3 --check all
    student-quartic basis-poly 4
    student-quartic verify --suite all

Exit codes: 0 success, 1 a check failed, 2 usage or domain error.
Exact inputs take ``P/Q`` or integers only.  ``STUDENT_QUARTIC_MAX_EVALS``
overrides the quadrature evaluation budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TextIO

from . import basis, moll, quadrature, student, verify
from .errors import DomainError
from .quadrature import QuadratureConfig
from .rational import format_rational, parse_rational

__all__ = ["CheckRecord", "OutputRecord", "main", "run"]

MAX_EVALS_ENV = "STUDENT_QUARTIC_MAX_EVALS"

# keys that are inputs in each command's flat JSON layout
INPUT_KEYS = {
    "quartic": ("m", "a"),
    "moll-d": ("m",),
    "moll-poly": ("m",),
    "beta": ("n", "m", "a"),
    "basis-poly": ("k",),
    "verify": ("suite", "tol"),
}


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class OutputRecord:
    """One command's result.

    Serialized flat: ``command``, the input and output keys side by side,
    and ``checks`` as ``{name: {"pass": bool, "detail": str}}``.
    """

    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any] = field(default_factory=dict)
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        payload = {"command": self.command, **self.inputs, **self.outputs}
        payload["checks"] = {c.name: {"pass": c.passed, "detail": c.detail} for c in self.checks}
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        payload = json.loads(text)
        command = payload.pop("command")
        checks = [CheckRecord(k, v["pass"], v["detail"]) for k, v in sorted(payload.pop("checks").items())]
        keys = INPUT_KEYS[command]
        inputs = {k: payload.pop(k) for k in keys if k in payload}
        return cls(command, inputs, payload, checks)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _exact(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not an exact rational; write it as P/Q (decimals are not accepted)"
        ) from None


def _real(text: str) -> float | Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} must be >= 0")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="student-quartic", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p, choices=("json", "csv")):
        p.add_argument("--format", choices=choices, default=choices[0])

    p = sub.add_parser("quartic", help="closed-form value of the quartic integral")
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--a", type=_real, required=True, help="a > -1, as P/Q or a decimal")
    p.add_argument("--verify", action="store_true", help="also integrate numerically")
    fmt(p)

    for name, help_ in (("moll-d", "exact coefficient table d_{j,m}"), ("moll-poly", "exact polynomial P_m")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--m", type=_count, required=True)
        fmt(p)

    p = sub.add_parser("beta", help="exact convolution weights beta_k^(n,m)(a)")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--a", type=_exact, required=True, help="0 < a < 1, as P/Q")
    p.add_argument("--check", choices=("all", "recursion", "symmetry", "none"), default="all")
    fmt(p)

    p = sub.add_parser("basis-poly", help="exact basis polynomial q_k")
    p.add_argument("k", type=_count)
    fmt(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("quartic", "conv", "fourier", "exact", "all"), default="all")
    p.add_argument("--tol", type=float, default=None, help="override numeric comparison tolerance")
    fmt(p, ("text", "json", "csv"))
    return parser


def _quadrature_config() -> QuadratureConfig:
    raw = os.environ.get(MAX_EVALS_ENV)
    if not raw:
        return QuadratureConfig()
    try:
        return QuadratureConfig(max_evaluations=int(raw))
    except ValueError as exc:
        raise DomainError(f"{MAX_EVALS_ENV}={raw!r}: {exc}") from None


def _number(value: float | Fraction) -> float | str:
    return format_rational(value) if isinstance(value, Fraction) else value


def _cmd_quartic(args) -> OutputRecord:
    spec = moll.QuarticIntegralSpec(args.a, args.m)
    value = moll.closed_form_value(spec)
    rec = OutputRecord("quartic", {"m": args.m, "a": _number(args.a)}, {"value": value})
    if args.verify:
        res = quadrature.integrate_half_line(lambda x: moll.quartic_integrand(spec, x), _quadrature_config())
        diff = abs(res.value - value)
        tol = max(1e-10, 1e-10 * abs(value))
        rec.outputs.update(quadrature=res.value, error_estimate=res.error_estimate, difference=diff)
        rec.checks.append(CheckRecord("closed_form_vs_quadrature", diff <= tol and res.converged,
                                      f"|diff|={diff:.3e} tol={tol:.1e} converged={res.converged}"))
    return rec


def _cmd_moll_d(args) -> OutputRecord:
    table = moll.d_classical(args.m)
    return OutputRecord("moll-d", {"m": args.m}, {"d": {str(j): format_rational(v) for j, v in enumerate(table.d)}})


def _cmd_moll_poly(args) -> OutputRecord:
    p = moll.moll_polynomial(args.m)
    return OutputRecord("moll-poly", {"m": args.m}, {
        "coefficients": [format_rational(c) for c in p.coefficients],
        "polynomial": p.to_string("a"),
    })


def _cmd_beta(args) -> OutputRecord:
    table = student.beta_general(args.n, args.m, args.a)
    rec = OutputRecord("beta", {"n": args.n, "m": args.m, "a": format_rational(args.a)},
                       {"beta": {str(k): format_rational(v) for k, v in sorted(table.coefficients.items())}})
    if args.check == "none":
        return rec
    if args.check == "all":
        total = table.total()
        rec.checks.append(CheckRecord("normalization", total == 1, f"sum={format_rational(total)}"))
        negative = [k for k, v in table.coefficients.items() if v < 0]
        rec.checks.append(CheckRecord("nonnegativity", not negative, f"negative at k={negative}" if negative else ""))
    if args.check in ("all", "recursion"):
        if args.n >= 1 and args.m >= 1:
            rec.checks.append(CheckRecord("recursion", student.check_recursion(args.n, args.m, args.a)))
        elif args.check == "recursion":
            rec.checks.append(CheckRecord("recursion", True, "not applicable: needs n >= 1 and m >= 1"))
    if args.check in ("all", "symmetry"):
        direct = student.beta_general(args.m, args.n, 1 - args.a)
        rec.checks.append(CheckRecord("symmetry", student.apply_symmetry(table) == direct,
                                      f"compared with beta(n={args.m}, m={args.n}, a={format_rational(1 - args.a)})"))
    return rec


def _cmd_basis_poly(args) -> OutputRecord:
    q = basis.basis_poly(args.k).poly
    return OutputRecord("basis-poly", {"k": args.k}, {
        "coefficients": [format_rational(c) for c in q.coefficients],
        "polynomial": str(q),
    })


def _cmd_verify(args) -> OutputRecord:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    checks = verify.run_suites(names, tol=args.tol, cfg=_quadrature_config())
    passed = sum(c.passed for c in checks)
    return OutputRecord("verify", {"suite": args.suite, "tol": args.tol},
                        {"passed": passed, "failed": len(checks) - passed},
                        [CheckRecord(c.name, c.passed, c.detail) for c in checks])


_COMMANDS = {
    "quartic": _cmd_quartic,
    "moll-d": _cmd_moll_d,
    "moll-poly": _cmd_moll_poly,
    "beta": _cmd_beta,
    "basis-poly": _cmd_basis_poly,
    "verify": _cmd_verify,
}


def _render_csv(rec: OutputRecord) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if rec.command == "beta":
        w.writerow(["k", "beta"])
        w.writerows(rec.outputs["beta"].items())
    elif rec.command == "moll-d":
        w.writerow(["index", "value"])
        w.writerows(rec.outputs["d"].items())
    elif rec.command in ("moll-poly", "basis-poly"):
        w.writerow(["index", "value"])
        w.writerows(enumerate(rec.outputs["coefficients"]))
    elif rec.command == "verify":
        w.writerow(["name", "pass", "detail"])
        w.writerows((c.name, c.passed, c.detail) for c in rec.checks)
        return buf.getvalue()
    else:
        w.writerow(["index", "value"])
        w.writerows((k, repr(v) if isinstance(v, float) else v) for k, v in rec.outputs.items())
    if rec.checks:
        w.writerow([])
        w.writerow(["check", "pass", "detail"])
        w.writerows((c.name, c.passed, c.detail) for c in rec.checks)
    return buf.getvalue()


def _render_text(rec: OutputRecord) -> str:
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.detail}".rstrip() for c in rec.checks]
    lines.append(f"{rec.outputs['passed']} passed, {rec.outputs['failed']} failed")
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Run one command; returns the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    try:
        rec = _COMMANDS[args.command](args)
    except (DomainError, ValueError) as exc:
        print(f"student-quartic {args.command}: {exc}", file=stderr)
        return 2
    if args.format == "csv":
        stdout.write(_render_csv(rec))
    elif args.format == "text":
        stdout.write(_render_text(rec))
    else:
        stdout.write(rec.to_json() + "\n")
    return 0 if rec.ok else 1


def main() -> None:
    sys.exit(run())
