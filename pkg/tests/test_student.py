import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as F

import pytest

from student_quartic import student
from student_quartic.errors import DomainError
from student_quartic.quadrature import convolution_lhs, integrate_real_line
from student_quartic.student import (
    BetaTable,
    PiScaledRational,
    StudentDensity,
    apply_symmetry,
    beta_equal_orders,
    beta_general,
    beta_half,
    check_recursion,
    density_value,
    normalizer,
)


class TestPiScaledRational:
    def test_arithmetic(self):
        x = PiScaledRational(F(2), -1)
        y = PiScaledRational(F(3), 1)
        assert x * y == PiScaledRational(F(6), 0)
        assert x / x == PiScaledRational(F(1), 0)
        assert float(y) == pytest.approx(3 * math.pi, rel=1e-15)
        assert PiScaledRational(F(1, 2)) * 2 == PiScaledRational(F(1))

    def test_exponent_range(self):
        x = PiScaledRational(F(1), -1)
        with pytest.raises(ValueError):
            x * x
        with pytest.raises(ValueError):
            PiScaledRational(F(1), 2)


class TestDensity:
    def test_normalizers(self):
        assert normalizer(0) == PiScaledRational(F(1), -1)
        assert normalizer(1) == PiScaledRational(F(2), -1)
        assert normalizer(2) == PiScaledRational(F(8, 3), -1)

    def test_normalizer_matches_gamma_ratio(self):
        for m in range(30):
            nu = m + 0.5
            gamma_form = math.exp(math.lgamma(nu + 0.5) - math.lgamma(0.5) - math.lgamma(nu))
            assert float(normalizer(m)) == pytest.approx(gamma_form, rel=1e-13)

    @pytest.mark.parametrize("m, x, expected", [
        (0, 0.0, 1 / math.pi),
        (1, 0.0, 2 / math.pi),
        (0, 1.0, 1 / (2 * math.pi)),
    ])
    def test_values(self, m, x, expected):
        assert density_value(StudentDensity(m), x) == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("m", range(6))
    def test_integrates_to_one(self, m):
        res = integrate_real_line(StudentDensity(m))
        assert res.converged
        assert abs(res.value - 1.0) <= 1e-12

    def test_degrees_of_freedom(self):
        d = StudentDensity(2)
        assert d.nu == F(5, 2)
        assert d.degrees_of_freedom == 5


class TestBetaGeneral:
    def test_trivial(self):
        for a in (F(1, 7), F(1, 2), F(5, 6)):
            assert dict(beta_general(0, 0, a).coefficients) == {0: 1}

    def test_equal_orders_at_half(self):
        assert dict(beta_general(1, 1, F(1, 2)).coefficients) == {1: F(1, 4), 2: F(3, 4)}

    def test_one_zero(self):
        # q_1(a t) = 1 + a t = (1 - a) q_0 + a q_1
        t = beta_general(1, 0, F(1, 3))
        assert dict(t.coefficients) == {0: F(2, 3), 1: F(1, 3)}
        assert t.total() == 1 and t.is_nonnegative()

    @pytest.mark.parametrize("x", [0.0, 1.0, 2.0])
    def test_one_zero_against_numeric_convolution(self, x):
        t = beta_general(1, 0, F(1, 3))
        res = convolution_lhs(1, 0, 1 / 3, x)
        assert abs(res.value - t.mixture_value(x)) <= 1e-8

    def test_support_starts_at_min_order(self):
        for n in range(6):
            for m in range(6):
                t = beta_general(n, m, F(2, 7))
                assert set(t.coefficients) == set(range(min(n, m), n + m + 1))
                assert t[min(n, m) - 1] == 0

    def test_getitem_outside_range(self):
        t = beta_general(2, 2, F(1, 3))
        assert t[0] == 0 and t[5] == 0

    @pytest.mark.parametrize("a", [F(0), F(1), F(-1, 2), F(3, 2)])
    def test_domain(self, a):
        with pytest.raises(DomainError):
            beta_general(1, 1, a)

    def test_float_a_refused(self):
        with pytest.raises(TypeError):
            beta_general(1, 1, 0.5)

    def test_normalized_and_nonnegative_small_grid(self):
        for p in range(1, 10):
            a = F(p, 10)
            for n in range(9):
                for m in range(9):
                    t = beta_general(n, m, a)
                    assert t.total() == 1
                    assert t.is_nonnegative()

    def test_cache_is_transparent_under_threads(self):
        cases = [(n, m, F(p, 11)) for n in range(6) for m in range(6) for p in (1, 4, 9)]
        serial = [beta_general(*c) for c in cases]
        student._beta_coefficients.cache_clear()
        with ThreadPoolExecutor(max_workers=8) as pool:
            parallel = list(pool.map(lambda c: beta_general(*c), cases * 3))
        assert parallel == serial * 3


class TestClosedForms:
    def test_equal_orders_examples(self):
        for a in (F(1, 9), F(1, 2), F(4, 5)):
            assert beta_equal_orders(0, 0, a) == 1
        assert beta_equal_orders(1, 1, F(1, 2)) == F(3, 4)
        assert beta_equal_orders(2, 0, F(1, 2)) == beta_half(2, 0)

    def test_equal_orders_by_hand(self):
        # (1 + a t)(1 + (1-a) t) = (1 - 3a(1-a)) q_1 + 3a(1-a) q_2
        for a in (F(1, 5), F(2, 3)):
            assert beta_equal_orders(1, 0, a) == 1 - 3 * a * (1 - a)
            assert beta_equal_orders(1, 1, a) == 3 * a * (1 - a)

    def test_half_examples(self):
        assert beta_half(1, 0) == F(1, 4)
        assert beta_half(1, 1) == F(3, 4)

    def test_half_sums_to_one(self):
        for m in range(51):
            assert sum(beta_half(m, i) for i in range(m + 1)) == 1

    def test_index_range(self):
        with pytest.raises(IndexError):
            beta_half(2, 3)
        with pytest.raises(IndexError):
            beta_equal_orders(2, -1, F(1, 2))

    def test_general_matches_equal_orders(self):
        for a in (F(1, 4), F(1, 2), F(3, 4)):
            for m in range(8):
                t = beta_general(m, m, a)
                for i in range(m + 1):
                    assert t[m + i] == beta_equal_orders(m, i, a)

    def test_equal_orders_matches_half(self):
        for m in range(16):
            for i in range(m + 1):
                assert beta_equal_orders(m, i, F(1, 2)) == beta_half(m, i)


class TestSymmetry:
    def test_fixed_point(self):
        t = beta_general(3, 3, F(1, 2))
        assert apply_symmetry(t) == t

    def test_relabel_matches_direct(self):
        assert apply_symmetry(beta_general(2, 1, F(1, 3))) == beta_general(1, 2, F(2, 3))
        for n in range(7):
            for m in range(7):
                assert apply_symmetry(beta_general(n, m, F(1, 5))) == beta_general(m, n, F(4, 5))

    def test_trivial_table(self):
        for a in (F(1, 3), F(3, 4)):
            s = apply_symmetry(beta_general(0, 0, a))
            assert dict(s.coefficients) == {0: 1} and s.a == 1 - a

    def test_involution(self):
        t = beta_general(4, 1, F(3, 8))
        assert apply_symmetry(apply_symmetry(t)) == t


class TestRecursion:
    @pytest.mark.parametrize("n, m, a", [(1, 1, F(1, 2)), (3, 2, F(1, 4)), (5, 5, F(9, 10))])
    def test_examples(self, n, m, a):
        assert check_recursion(n, m, a)

    def test_by_hand_one_one(self):
        # beta^(1,0)(a) = {0: 1-a, 1: a}, beta^(0,1)(a) = {0: a, 1: 1-a}
        a = F(1, 2)
        lhs = beta_general(1, 1, a)[2] / 3
        assert lhs == a * a * beta_general(0, 1, a)[1] + (1 - a) ** 2 * beta_general(1, 0, a)[1]

    def test_detects_wrong_table(self, monkeypatch):
        real = student.beta_general

        def skewed(n, m, a):
            t = real(n, m, a)
            if (n, m) == (2, 2):
                c = dict(t.coefficients)
                c[3] += F(1, 1000)
                c[4] -= F(1, 1000)
                return BetaTable(n, m, t.a, c)
            return t

        monkeypatch.setattr(student, "beta_general", skewed)
        assert not check_recursion(2, 2, F(1, 3))

    def test_requires_positive_orders(self):
        with pytest.raises(ValueError):
            check_recursion(0, 2, F(1, 2))
