import os
import itertools
import warnings

from fractions import Fraction

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st
from monty.serialization import dumpfn, loadfn

from pywpfol.errors import (
    AmbientMismatch,
    IndexOutOfRange,
    InvalidWeights,
    NotQuasiHomogeneous,
    ZeroDivisor,
    ZeroPoint,
    ZeroPolynomial,
)
from pywpfol.polynomial import (
    WeightSystem,
    QHPolynomial,
    ProjectivePoint,
    QuasiSmoothness,
    weighted_degree,
    partial_derivative,
    divmod_poly,
    divides,
    sections_dimension,
    monomials_of_degree,
    random_qh_polynomial,
    well_formed,
    is_quasi_smooth_restricted,
)


def var(i, w, coeff=1, power=1):
    return QHPolynomial.variable(i, w, coeff=coeff, power=power)


def random_sparse_polynomial(rng, w, max_terms=6, max_exponent=3):
    """Not necessarily quasi-homogeneous."""
    size = int(rng.integers(1, max_terms + 1))
    terms = []
    for _ in range(size):
        exps = tuple(int(k) for k in rng.integers(0, max_exponent + 1, size=len(w)))
        c = int(rng.integers(-9, 10)) or 1
        terms.append((exps, c))
    p = QHPolynomial(terms, w)
    return p if not p.is_zero() else QHPolynomial.constant(1, w)


class TestWeightSystem(object):
    def test_validation(self):
        assert WeightSystem((3, 5, 1, 7)).n == 3

        with pytest.raises(InvalidWeights):
            WeightSystem((1,))
        with pytest.raises(InvalidWeights):
            WeightSystem((1, 0, 2))
        with pytest.raises(InvalidWeights):
            WeightSystem((1, 1.5))

    def test_well_formed(self):
        assert well_formed((1, 1, 2))
        assert not well_formed((2, 2, 3))
        assert well_formed((3, 5, 1, 7))


class TestQHPolynomial(object):
    @pytest.fixture
    def w3(self):
        return WeightSystem((1, 1, 1))

    def test_zero_coefficients_dropped(self, w3):
        p = QHPolynomial({(1, 0, 0): 1, (0, 1, 0): 0}, w3)
        assert len(p.terms) == 1
        assert (var(0, w3) - var(0, w3)).is_zero()

    def test_weighted_degree(self, w3):
        assert weighted_degree(var(0, w3) * var(1, w3)) == 2

        w = WeightSystem((3, 5, 1, 7))
        f = var(0, w, power=35) + var(1, w, power=21)
        assert weighted_degree(f) == 105

        with pytest.raises(NotQuasiHomogeneous):
            weighted_degree(var(0, (1, 2)) + var(1, (1, 2)))
        with pytest.raises(ZeroPolynomial):
            weighted_degree(QHPolynomial.zero(w3))

    def test_constants_hash_like_scalars(self, w3):
        five = QHPolynomial.constant(5, w3)
        assert five == 5 and hash(five) == hash(5)
        assert QHPolynomial.constant(Fraction(3, 4), (1, 2)) == Fraction(3, 4)
        assert hash(QHPolynomial.constant(Fraction(3, 4), (1, 2))) == hash(Fraction(3, 4))
        assert QHPolynomial.zero(w3) == 0 and hash(QHPolynomial.zero(w3)) == hash(0)

        assert {five: "x"}[5] == "x"
        assert len({five, 5, QHPolynomial.constant(5, w3)}) == 1
        assert hash(var(0, w3) * var(1, w3)) == hash(var(1, w3) * var(0, w3))

    def test_asserted_degree(self):
        with pytest.raises(NotQuasiHomogeneous):
            QHPolynomial({(1, 0): 1, (0, 1): 1}, (1, 2), degree=1)

    def test_partial_derivative(self, w3):
        assert partial_derivative(var(0, w3, power=3), 0) == var(0, w3, coeff=3, power=2)
        assert partial_derivative(var(1, w3, power=2), 0).is_zero()
        assert partial_derivative(var(0, w3, power=2) * var(1, w3), 1) == var(0, w3, power=2)

        with pytest.raises(IndexOutOfRange):
            partial_derivative(var(0, w3), 3)

    def test_arithmetic(self, w3):
        x0, x1 = var(0, w3), var(1, w3)
        assert (x0 + x1) * (x0 - x1) == x0 ** 2 - x1 ** 2
        assert (Fraction(1, 2) * x0 + x0) == Fraction(3, 2) * x0
        assert (x0 ** 0) == 1

        with pytest.raises(AmbientMismatch):
            x0 + var(0, (1, 2, 3))

    def test_evaluate_and_compose(self, w3):
        x0, x1, x2 = [var(i, w3) for i in range(3)]
        p = x0 ** 2 + 3 * x1 * x2
        assert p.evaluate([1, 2, Fraction(1, 3)]) == 3

        swapped = p.compose([x1, x0, x2])
        assert swapped == x1 ** 2 + 3 * x0 * x2

    def test_str(self, w3):
        p = QHPolynomial({(2, 0, 0): -1, (0, 1, 1): Fraction(3, 4), (0, 0, 0): 2}, w3)
        assert str(p) == "-x0^2 + 3/4*x1*x2 + 2"
        assert str(QHPolynomial.zero(w3)) == "0"

    def test_leading_term(self, w3):
        p = var(0, w3) + var(1, w3, power=2)
        assert p.leading_term() == ((0, 2, 0), 1)

    def test_output_save(self):
        w = WeightSystem((3, 5, 1, 7))
        p = var(0, w, power=35) - Fraction(2, 3) * var(1, w, power=21)

        p_from_dict = QHPolynomial.from_dict(p.as_dict())
        dumpfn(p_from_dict, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert out == p
        assert out.ambient == w


class TestDivision(object):
    def test_divides_examples(self):
        w = WeightSystem((1, 1, 1))
        x0, x1 = var(0, w), var(1, w)

        assert divides(x0 - x1, x0 ** 2 - x1 ** 2) == x0 + x1
        assert divides(x0, x1) is None

        with pytest.raises(ZeroDivisor):
            divides(QHPolynomial.zero(w), x0)

    def test_division_roundtrip(self):
        w = WeightSystem((1, 1, 1))
        for index in range(500):
            rng = np.random.default_rng([7, index])
            f = random_sparse_polynomial(rng, w)
            q = random_sparse_polynomial(rng, w)
            assert divides(f, f * q) == q

    def test_remainder_not_divisible_by_leading_monomial(self):
        w = WeightSystem((1, 1))
        rng = np.random.default_rng(3)
        for _ in range(50):
            p = random_sparse_polynomial(rng, w)
            f = random_sparse_polynomial(rng, w)
            q, r = divmod_poly(p, f)
            lm, _ = f.leading_term()

            assert q * f + r == p
            for e in r.terms:
                assert not all(a >= b for a, b in zip(e, lm))

    @settings(deadline=None, max_examples=50)
    @given(
        st.dictionaries(
            st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=5
        ),
        st.dictionaries(
            st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), min_size=1, max_size=4
        ),
    )
    def test_division_identity(self, p_terms, f_terms):
        w = WeightSystem((1, 1))
        p = QHPolynomial(p_terms, w)
        f = QHPolynomial(f_terms, w)
        if f.is_zero():
            return

        q, r = divmod_poly(p, f)
        assert q * f + r == p


class TestSections(object):
    def test_examples(self):
        assert sections_dimension((1, 1, 1), 2) == 6
        assert sections_dimension((1, 2), 4) == 3
        assert sections_dimension((2, 3), 1) == 0
        assert sections_dimension((1, 1), -1) == 0

    def test_brute_force(self):
        # every weight system of length 2 or 3 with product <= 60
        systems = []
        for size in (2, 3):
            for w in itertools.combinations_with_replacement(range(1, 61), size):
                if np.prod(w) <= 60:
                    systems.append(w)

        for w in systems:
            for d in range(41):
                ranges = [range(d // wi + 1) for wi in w[:-1]]
                count = 0
                for ks in itertools.product(*ranges):
                    rest = d - sum(k * wi for k, wi in zip(ks, w))
                    if rest >= 0 and rest % w[-1] == 0:
                        count += 1
                assert sections_dimension(w, d) == count, (w, d)

    def test_brute_force_four_weights(self):
        for w in [(1, 1, 1, 1), (1, 2, 3, 5), (3, 5, 1, 2), (2, 2, 3, 5)]:
            for d in range(21):
                count = sum(
                    1
                    for ks in itertools.product(*[range(d // wi + 1) for wi in w])
                    if sum(k * wi for k, wi in zip(ks, w)) == d
                )
                assert sections_dimension(w, d) == count

    def test_monomials_of_degree(self):
        w = WeightSystem((1, 2))
        assert monomials_of_degree(w, 4) == [(0, 2), (2, 1), (4, 0)]
        assert len(monomials_of_degree((1, 1, 1), 2)) == sections_dimension((1, 1, 1), 2)

    def test_random_qh_polynomial(self):
        rng = np.random.default_rng(0)
        w = WeightSystem((1, 2, 3))
        p = random_qh_polynomial(rng, w, 6)
        assert weighted_degree(p) == 6


class TestQuasiSmooth(object):
    @pytest.fixture
    def w3(self):
        return WeightSystem((1, 1, 1))

    def test_pham_brieskorn(self, w3):
        f = var(0, w3, power=2) + var(1, w3, power=3) + var(2, w3, power=5)
        assert is_quasi_smooth_restricted(f) == QuasiSmoothness.QUASI_SMOOTH

    def test_missing_variable(self, w3):
        f = var(0, w3, power=2) + var(1, w3, power=3)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert is_quasi_smooth_restricted(f) == QuasiSmoothness.NOT_QUASI_SMOOTH

    def test_other_shapes(self, w3):
        f = var(0, w3, power=2) * var(1, w3) + var(2, w3, power=3)
        assert is_quasi_smooth_restricted(f) == QuasiSmoothness.UNDETERMINED

        g = var(0, w3, power=2) + var(0, w3, power=3) + var(1, w3) + var(2, w3)
        assert is_quasi_smooth_restricted(g) == QuasiSmoothness.UNDETERMINED

        with pytest.raises(ZeroPolynomial):
            is_quasi_smooth_restricted(QHPolynomial.zero(w3))


class TestProjectivePoint(object):
    def test_zero_point(self):
        with pytest.raises(ZeroPoint):
            ProjectivePoint([0, 0, 0])

    def test_rescale(self):
        p = ProjectivePoint([1, Fraction(1, 2), 3])
        q = p.rescale(2, (1, 2, 3))
        assert q.coordinates == (2, 2, 24)

    def test_output_save(self):
        p = ProjectivePoint([1, Fraction(-1, 2), 0])
        dumpfn(p, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert out.coordinates == p.coordinates


if __name__ == "__main__":
    pytest.main()
