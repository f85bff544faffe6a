import io
import json
from fractions import Fraction as F

import pytest

from student_quartic import moll, student
from student_quartic.cli import OutputRecord, run
from student_quartic.moll import MollCoefficientTable


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_quartic_value():
    code, out, _ = call("quartic", "--m", "0", "--a", "1")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(0.7853981634, abs=1e-10)


def test_quartic_verify():
    code, out, _ = call("quartic", "--m", "4", "--a", "-0.9", "--verify")
    payload = json.loads(out)
    assert code == 0
    assert payload["checks"]["closed_form_vs_quadrature"]["pass"]
    assert payload["difference"] <= 1e-10 * payload["value"]


def test_quartic_rational_a_echoed_exactly():
    code, out, _ = call("quartic", "--m", "1", "--a", "1/3")
    assert code == 0 and json.loads(out)["a"] == "1/3"


def test_moll_d_csv():
    code, out, _ = call("moll-d", "--m", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["index,value", "0,3/2", "1,1"]


def test_moll_poly():
    code, out, _ = call("moll-poly", "--m", "1")
    payload = json.loads(out)
    assert payload["coefficients"] == ["3/2", "1"]
    assert payload["polynomial"] == "3/2 + a"


def test_beta_json():
    code, out, _ = call("beta", "--n", "1", "--m", "1", "--a", "1/2")
    payload = json.loads(out)
    assert code == 0
    assert payload["beta"] == {"1": "1/4", "2": "3/4"}
    assert (payload["n"], payload["m"], payload["a"]) == (1, 1, "1/2")
    assert set(payload["checks"]) == {"normalization", "nonnegativity", "recursion", "symmetry"}
    assert all(c["pass"] for c in payload["checks"].values())


def test_beta_csv_and_check_selection():
    code, out, _ = call("beta", "--n", "2", "--m", "0", "--a", "1/3", "--check", "none", "--format", "csv")
    assert code == 0
    # q_2(t/3) = 1 + t/3 + t^2/27 = 2/3 q_0 + 2/9 q_1 + 1/9 q_2
    assert out.splitlines() == ["k,beta", "0,2/3", "1,2/9", "2,1/9"]
    code, out, _ = call("beta", "--n", "3", "--m", "2", "--a", "1/4", "--check", "recursion")
    assert code == 0 and list(json.loads(out)["checks"]) == ["recursion"]


def test_basis_poly():
    code, out, _ = call("basis-poly", "2")
    assert json.loads(out)["coefficients"] == ["1", "1", "1/3"]
    code, out, _ = call("basis-poly", "3", "--format", "csv")
    assert out.splitlines() == ["index,value", "0,1", "1,1", "2,2/5", "3,1/15"]


@pytest.mark.parametrize("argv", [
    ("quartic", "--m", "1", "--a", "-1"),
    ("quartic", "--m", "1", "--a=-3/2"),
    ("beta", "--n", "1", "--m", "1", "--a", "1"),
    ("beta", "--n", "1", "--m", "1", "--a", "0"),
])
def test_domain_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1
    assert ("a > -1" in err) or ("0 < a < 1" in err)


@pytest.mark.parametrize("argv", [
    ("beta", "--n", "1", "--m", "1", "--a", "0.5"),
    ("quartic", "--m", "1", "--a", "1", "--bogus"),
    ("frobnicate",),
    ("moll-d", "--m", "-1"),
    (),
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert "usage:" in err


def test_decimal_rejection_message():
    _, _, err = call("beta", "--n", "1", "--m", "1", "--a", "0.5")
    assert "P/Q" in err


def test_factorial_cap_is_usage_domain_error():
    code, _, err = call("moll-d", "--m", "6000")
    assert code == 2 and "cap" in err


def test_max_evals_env(monkeypatch):
    monkeypatch.setenv("STUDENT_QUARTIC_MAX_EVALS", "45")
    code, out, _ = call("quartic", "--m", "10", "--a", "-0.9", "--verify")
    assert code == 1
    assert not json.loads(out)["checks"]["closed_form_vs_quadrature"]["pass"]
    monkeypatch.setenv("STUDENT_QUARTIC_MAX_EVALS", "lots")
    assert call("quartic", "--m", "0", "--a", "0", "--verify")[0] == 2


@pytest.mark.parametrize("argv", [
    ("quartic", "--m", "2", "--a", "0.3", "--verify"),
    ("moll-d", "--m", "4"),
    ("moll-poly", "--m", "3"),
    ("beta", "--n", "3", "--m", "2", "--a", "2/7"),
    ("basis-poly", "5"),
    ("verify", "--suite", "fourier", "--format", "json"),
])
def test_json_round_trip(argv):
    _, out, _ = call(*argv)
    rec = OutputRecord.from_json(out)
    assert rec.to_json() + "\n" == out
    assert OutputRecord.from_json(rec.to_json()) == rec
    assert json.loads(rec.to_json()) == json.loads(out)


def test_verify_suites_report():
    code, out, _ = call("verify", "--suite", "fourier")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 16
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1] == "15 passed, 0 failed"


def test_verify_tolerance_override():
    code, out, _ = call("verify", "--suite", "conv", "--tol", "1e-30")
    assert code == 1 and "FAIL" in out


def test_verify_all_passes():
    code, out, _ = call("verify", "--suite", "all")
    assert code == 0, out
    assert out.splitlines()[-1].endswith(" 0 failed")


def _bump_constant(table: MollCoefficientTable) -> MollCoefficientTable:
    return MollCoefficientTable(table.m, (table.d[0] + F(1, 10**9),) + table.d[1:])


@pytest.mark.parametrize("target, attr, wrap, suite", [
    (moll, "d_classical", _bump_constant, "all"),
    (moll, "d_derived", _bump_constant, "exact"),
    (student, "beta_half", lambda v: v * F(1000001, 1000000), "exact"),
    (student, "beta_equal_orders", lambda v: v + F(1, 10**12), "exact"),
])
def test_mutation_smoke(monkeypatch, target, attr, wrap, suite):
    real = getattr(target, attr)

    def mutated(*args):
        value = real(*args)
        return wrap(value) if args[0] == 2 else value

    monkeypatch.setattr(target, attr, mutated)
    code, out, _ = call("verify", "--suite", suite)
    assert code == 1
    assert "FAIL" in out
