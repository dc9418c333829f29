import os

from fractions import Fraction

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st
from monty.serialization import dumpfn, loadfn

from pywpfol.bounds import (
    BoundCase,
    BoundCheck,
    BoundReport,
    BoundStatus,
    RationalInterval,
    UnivariatePoly,
    alpha_asymptotic_bounds,
    alpha_enclosure,
    check_bound,
    chern_coefficient_V,
    crossing_polynomial,
    crossing_value_at_one,
    lemma_q_polynomial,
    milnor_sum_on_V,
    milnor_sum_total,
    omega_poly,
    omega_via_p,
    p_poly,
    poincare_bound,
    psi,
    psi_closed_form_rhs,
    q_poly,
    r_n,
    root_enclosure,
    sigma,
    sigmas,
)
from pywpfol.errors import (
    DegreeConditionViolated,
    DimensionTooSmall,
    IndexOutOfRange,
)
from pywpfol.polynomial import WeightSystem
from pywpfol.settings import ALPHA_WIDTH
from pywpfol.utils import truncate_decimal


class TestSymmetricFunctions(object):
    def test_sigmas(self):
        assert sigmas((3, 5, 1, 7)) == [1, 16, 86, 176, 105]
        assert sigma(WeightSystem((3, 5, 1, 7)), 3) == 176
        assert sigmas((1, 1, 1)) == [1, 3, 3, 1]

        with pytest.raises(IndexOutOfRange):
            sigma((1, 2), 3)

    def test_sub_tuples(self):
        # a single weight is not a WeightSystem but still has symmetric functions
        assert sigma((4,), 1) == 4
        assert sigma((), 0) == 1


class TestMilnorSums(object):
    def test_p2_total(self):
        for d in range(0, 12):
            assert milnor_sum_total((1, 1, 1), d) == d ** 2 + d + 1

    def test_weighted_total(self):
        w = WeightSystem((1, 2, 3))
        # ((d-1)^2 + 6(d-1) + 11) / 6
        assert milnor_sum_total(w, 2) == Fraction(18, 6)
        assert milnor_sum_total(w, 1) == Fraction(11, 6)

    def test_degree_condition(self):
        with pytest.raises(DegreeConditionViolated):
            milnor_sum_total((1, 1, 1), -1)
        assert milnor_sum_total((1, 1, 1), 0) == 1

    def test_on_v_matches_psi(self):
        for index in range(100):
            rng = np.random.default_rng([21, index])
            n = int(rng.integers(2, 7))
            w = WeightSystem([int(x) for x in rng.integers(1, 8, size=n + 1)])
            d = int(rng.integers(1, 30))
            d0 = int(rng.integers(1, 40))

            assert milnor_sum_on_V(w, d, d0) == psi(w, d)(d0) / w.product()

    def test_on_v_positive_degree(self):
        with pytest.raises(ValueError):
            milnor_sum_on_V((1, 1, 1), 2, 0)

    def test_chern_coefficients(self):
        w = (1, 1, 1, 1)
        assert chern_coefficient_V(w, 2, 0) == 1
        assert chern_coefficient_V(w, 2, 1) == 2
        assert chern_coefficient_V(w, 2, 2) == 6 - 4 * 2 + 4

        with pytest.raises(IndexOutOfRange):
            chern_coefficient_V(w, 2, 3)


class TestUnivariatePoly(object):
    def test_arithmetic(self):
        t = UnivariatePoly([0, 1])
        p = (t + 1) ** 2
        assert p.coefficients == (1, 2, 1)
        assert (p - p).is_zero()
        assert (p - p).degree == -1
        assert p(Fraction(1, 2)) == Fraction(9, 4)
        assert p.derivative() == UnivariatePoly([2, 2])

    def test_divide_by_t(self):
        assert UnivariatePoly([0, 3, 1]).divide_by_t() == UnivariatePoly([3, 1])
        with pytest.raises(ValueError):
            UnivariatePoly([1, 1]).divide_by_t()

    def test_repr(self):
        assert repr(UnivariatePoly([11, -5, 1])) == "t^2 - 5*t + 11"
        assert repr(UnivariatePoly([])) == "0"
        assert repr(UnivariatePoly([Fraction(-1, 2), 0, -1])) == "-t^2 - 1/2"

    def test_output_save(self):
        p = UnivariatePoly([Fraction(1, 3), 0, -2])
        dumpfn(p, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert out == p


class TestPsiOmega(object):
    def test_psi_example(self):
        poly = psi((1, 1, 1, 1), 2)
        assert poly == UnivariatePoly([0, 11, -5, 1])
        assert poly(1) == 7

    def test_psi_higher_degree(self):
        poly = psi((1, 1, 1, 1), 5)
        assert poly == UnivariatePoly([0, 38, -8, 1])
        assert omega_poly((1, 1, 1, 1), 5) == UnivariatePoly([38, -16, 3])
        assert omega_poly((1, 1, 1, 1), 5)(0) > sigma((1, 1, 1, 1), 2)

    def test_psi_n2(self):
        poly = psi((1, 2, 3), 4)
        assert poly == UnivariatePoly([0, 9, -1])
        assert omega_poly((1, 2, 3), 4) == UnivariatePoly([-1])

    def test_psi_dimension(self):
        with pytest.raises(DimensionTooSmall):
            psi((1, 2), 3)

    def test_closed_form(self):
        for index in range(100):
            rng = np.random.default_rng([22, index])
            n = int(rng.integers(2, 8))
            w = WeightSystem([int(x) for x in rng.integers(1, 10, size=n + 1)])
            d = int(rng.integers(1, 40))
            t = Fraction(int(rng.integers(0, 200)), int(rng.integers(1, 10)))

            assert psi(w, d)(t) * (d - 1 + t) == psi_closed_form_rhs(w, d, t)

    def test_omega_via_p(self):
        for index in range(100):
            rng = np.random.default_rng([23, index])
            n = int(rng.integers(2, 8))
            w = WeightSystem([int(x) for x in rng.integers(1, 10, size=n + 1)])
            d = int(rng.integers(2, 40))
            t = Fraction(int(rng.integers(0, 200)), int(rng.integers(1, 10)))

            assert omega_poly(w, d)(t) == omega_via_p(w, d, t)

    def test_omega_via_p_degree_one(self):
        with pytest.raises(ValueError):
            omega_via_p((1, 1, 1, 1), 1, 2)

    @settings(deadline=None, max_examples=50)
    @given(
        st.lists(st.integers(1, 9), min_size=3, max_size=7),
        st.integers(1, 30),
        st.fractions(min_value=0, max_value=50, max_denominator=20),
    )
    def test_closed_form_property(self, weights, d, t):
        w = WeightSystem(weights)
        assert psi(w, d)(t) * (d - 1 + t) == psi_closed_form_rhs(w, d, t)


class TestPQ(object):
    def test_p_examples(self):
        assert p_poly(0) == UnivariatePoly([1])
        assert p_poly(1) == UnivariatePoly([-1, 2])
        assert p_poly(2) == UnivariatePoly([1, -2, 3])

        with pytest.raises(IndexOutOfRange):
            p_poly(-1)

    def test_q_closed_form(self):
        assert q_poly(2) == UnivariatePoly([2, -4, 3])
        assert lemma_q_polynomial(2) == UnivariatePoly([2, 0, -3, 2, 3])

        square = UnivariatePoly([1, 1]) ** 2
        for m in range(1, 21):
            assert square * q_poly(m) == lemma_q_polynomial(m)

        with pytest.raises(IndexOutOfRange):
            q_poly(0)


class TestAlpha(object):
    @pytest.mark.parametrize(
        "n, expected",
        [
            (3, "0.5436"),
            (4, "0.5436"),
            (5, "0.3880"),
            (6, "0.3880"),
            (7, "0.3069"),
            (9, "0.2563"),
            (11, "0.2214"),
            (13, "0.1957"),
            (15, "0.1759"),
            (17, "0.1601"),
            (19, "0.1471"),
        ],
    )
    def test_truncated_values(self, n, expected):
        interval = alpha_enclosure(n)
        assert truncate_decimal(interval.lo, 4) == expected

    def test_decimal_interval(self):
        assert alpha_enclosure(3).decimal(4) == ("0.5436", "0.5437")
        assert alpha_enclosure(5).decimal(4) == ("0.3880", "0.3881")

        for n in range(1, 12):
            interval = root_enclosure(n)
            for places in (0, 3, 6, 9):
                lo, hi = interval.decimal(places)
                assert Fraction(lo) <= interval.lo
                assert interval.hi <= Fraction(hi)

    def test_enclosure_certificate(self):
        for n in range(1, 25):
            interval = root_enclosure(n)
            assert interval.width <= ALPHA_WIDTH
            assert r_n(n, interval.lo) < 0 < r_n(n, interval.hi)

    def test_rational_root(self):
        # R_1(x) = x^2 + x - 2 vanishes at 1
        interval = root_enclosure(1, Fraction(1, 100))
        assert interval.contains(1)
        assert interval.width <= Fraction(1, 100)

    def test_even_n_uses_previous_root(self):
        assert alpha_enclosure(8) == root_enclosure(7)

    def test_invalid(self):
        with pytest.raises(DimensionTooSmall):
            alpha_enclosure(2)
        with pytest.raises(ValueError):
            root_enclosure(3, 0)

    def test_asymptotic_sandwich(self):
        for n in range(3, 101):
            lower, upper = alpha_asymptotic_bounds(n)
            interval = root_enclosure(n)

            assert lower <= float(interval.hi)
            assert float(interval.lo) <= upper

    def test_crossing_value_at_one(self):
        for n in (3, 5, 7):
            for a in (Fraction(1, 3), Fraction(1, 2), Fraction(2)):
                assert crossing_value_at_one(n, a) == r_n(n, a)
                assert crossing_polynomial(n, a).degree <= n

    def test_interval_output_save(self):
        interval = alpha_enclosure(5)
        dumpfn(interval, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert out == interval

    def test_affine(self):
        interval = RationalInterval(Fraction(1, 2), Fraction(3, 4))
        image = interval.affine(97, 16)
        assert (image.lo, image.hi) == (105, 109)

        with pytest.raises(ValueError):
            interval.affine(0, -1)
        with pytest.raises(ValueError):
            RationalInterval(1, 0)


class TestPoincareBound(object):
    def test_n2(self):
        report = poincare_bound((1, 1, 1), 3)
        assert report.case == BoundCase.N2_EXACT
        assert report.hypothesis_met
        assert report.bound_value == 4
        assert report.alpha is None

    def test_family_ambient(self):
        report = poincare_bound((3, 5, 1, 7), 98)
        assert report.case == BoundCase.NGE3_ALPHA
        assert report.hypothesis_met
        assert report.sigma1 == 16
        assert report.bound_value.lo == 97 + 16 * report.alpha.lo
        assert report.bound_value.hi == 97 + 16 * report.alpha.hi
        assert report.bound_value.lo > 105

    def test_hypothesis_not_met(self):
        report = poincare_bound((1, 1, 1, 1), 2)
        assert not report.hypothesis_met

    def test_errors(self):
        with pytest.raises(DimensionTooSmall):
            poincare_bound((1, 2), 3)
        with pytest.raises(DegreeConditionViolated):
            poincare_bound((1, 1, 1, 1), -1)

    def test_output_save(self):
        for report in (poincare_bound((1, 2, 3), 4), poincare_bound((3, 5, 1, 7), 98)):
            dumpfn(report, "tmp.json")
            out = loadfn("tmp.json")
            os.remove("tmp.json")

            assert isinstance(out, BoundReport)
            assert out.case == report.case
            assert out.bound_value == report.bound_value
            assert out.weights == report.weights


class TestCheckBound(object):
    def test_violated(self):
        check = check_bound((1, 1, 1, 1), 5, 7)
        assert check.status == BoundStatus.VIOLATED
        assert check.quotient == Fraction(3, 4)
        assert check.r_value == Fraction(517, 256)
        assert check.m == 3

    def test_family_example(self):
        check = check_bound((3, 5, 1, 7), 98, 105)
        assert check.status == BoundStatus.SATISFIED
        assert check.quotient == Fraction(1, 2)
        assert check.r_value == Fraction(-5, 16)

    def test_even_dimension(self):
        check = check_bound((3, 5, 1, 7, 2), 203, 210)
        assert check.status == BoundStatus.SATISFIED
        assert check.m == 3
        assert check.quotient == Fraction(4, 9)
        assert check.r_value == Fraction(-4334, 6561)

    def test_hypothesis_not_met(self):
        assert check_bound((1, 1, 1, 1), 2, 3).status == BoundStatus.HYPOTHESIS_NOT_MET

    def test_non_positive_quotient(self):
        check = check_bound((1, 1, 1, 1), 10, 5)
        assert check.status == BoundStatus.SATISFIED
        assert check.r_value is None

    def test_n2(self):
        assert check_bound((1, 1, 1), 3, 4).status == BoundStatus.SATISFIED
        assert check_bound((1, 1, 1), 3, 5).status == BoundStatus.VIOLATED

    def test_agrees_with_enclosure(self):
        # away from the enclosure the exact verdict matches the interval
        for index in range(100):
            rng = np.random.default_rng([24, index])
            n = int(rng.integers(3, 8))
            w = [int(x) for x in rng.integers(1, 6, size=n + 1)]
            d = sum(w) + 1 + int(rng.integers(0, 20))
            d0 = int(rng.integers(1, 3 * d))

            report = poincare_bound(w, d)
            check = check_bound(w, d, d0)
            if d0 < report.bound_value.lo:
                assert check.status == BoundStatus.SATISFIED
            elif d0 > report.bound_value.hi:
                assert check.status == BoundStatus.VIOLATED

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            check_bound((1, 1, 1, 1), 5, 0)

    def test_output_save(self):
        check = check_bound((1, 1, 1, 1), 5, 7)
        dumpfn(check, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert isinstance(out, BoundCheck)
        assert out.status == BoundStatus.VIOLATED
        assert out.r_value == Fraction(517, 256)


if __name__ == "__main__":
    pytest.main()
