import os

import pytest

from monty.serialization import dumpfn, loadfn

from pywpfol.errors import (
    AmbientMismatch,
    CommonFactor,
    InfinitelyManySingularities,
    ShearExhausted,
    ZeroPolynomial,
)
from pywpfol.foliation import VectorField, radial_field
from pywpfol.oracles import (
    AFFINE_PLANE,
    P2,
    OracleMethod,
    P2SingularityCheck,
    bivariate_intersection_total,
    check_singF_p2,
    has_singular_curve,
    milnor_product_oracle,
    singularities_at_infinity,
    transform_field,
)
from pywpfol.polynomial import QHPolynomial


def plane(i, power=1, coeff=1):
    return QHPolynomial.variable(i, AFFINE_PLANE, coeff=coeff, power=power)


def field(*components):
    z = [QHPolynomial.variable(i, P2) for i in range(3)]
    return VectorField([c(*z) for c in components], P2)


class TestProductOracle(object):
    def test_examples(self):
        assert milnor_product_oracle([2, 3]) == 6
        assert milnor_product_oracle([1, 1, 1]) == 1
        assert milnor_product_oracle([35, 21, 105]) == 77175

    def test_invalid(self):
        with pytest.raises(ValueError):
            milnor_product_oracle([2, 0])


class TestBivariateResultant(object):
    def test_pure_powers(self):
        for a in range(1, 7):
            for b in range(1, 7):
                result = bivariate_intersection_total(plane(0, a), plane(1, b))
                assert result.total == milnor_product_oracle([a, b])
                assert result.method == OracleMethod.BIVARIATE_RESULTANT

    def test_details(self):
        result = bivariate_intersection_total(plane(0, 2), plane(1, 3))
        assert result.details[0] == {"factor": "x", "multiplicity": 6, "degree": 1}
        assert result.details[-1] == {"shears": [1, 2]}

    def test_degenerate_shear_skipped(self):
        # y - x has a vanishing top form at (1, 1)
        P = plane(0, 2) - QHPolynomial.constant(1, AFFINE_PLANE)
        Q = plane(1) - plane(0)
        result = bivariate_intersection_total(P, Q)

        assert result.total == 2
        assert result.details[-1] == {"shears": [2, 3]}

    def test_shear_exhausted(self):
        with pytest.raises(ShearExhausted):
            bivariate_intersection_total(plane(0), plane(1), shears=(1,))
        with pytest.raises(ShearExhausted):
            bivariate_intersection_total(plane(0), plane(1) - plane(0), shears=(1, 2))

    def test_common_factor(self):
        P = plane(0) * plane(1)
        Q = plane(0) * (plane(1) + 1)
        with pytest.raises(CommonFactor):
            bivariate_intersection_total(P, Q)

    def test_invalid_input(self):
        with pytest.raises(ZeroPolynomial):
            bivariate_intersection_total(QHPolynomial.zero(AFFINE_PLANE), plane(1))
        with pytest.raises(AmbientMismatch):
            bivariate_intersection_total(QHPolynomial.variable(0, P2), plane(1))

    def test_output_save(self):
        result = bivariate_intersection_total(plane(0, 2), plane(1, 2))
        dumpfn(result, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert out.total == 4
        assert out.method == OracleMethod.BIVARIATE_RESULTANT
        assert out.details == result.details


class TestChartChanges(object):
    def test_identity(self):
        X = field(lambda x, y, z: x * y, lambda x, y, z: z ** 2, lambda x, y, z: x ** 2)
        assert transform_field(X, 0, 0) == X

    def test_radial_is_preserved(self):
        assert transform_field(radial_field(P2), 1, 2) == radial_field(P2)

    def test_singularities_at_infinity(self):
        diagonal = field(lambda x, y, z: x, lambda x, y, z: 2 * y, lambda x, y, z: 3 * z)
        # [1:0:0] and [0:1:0] are singular and lie on z = 0
        assert singularities_at_infinity(diagonal)
        assert not singularities_at_infinity(transform_field(diagonal, 1, 2))

    def test_ambient(self):
        with pytest.raises(AmbientMismatch):
            transform_field(radial_field((1, 1, 2)), 1, 2)


class TestCheckSingP2(object):
    @pytest.mark.parametrize(
        "components",
        [
            (lambda x, y, z: x, lambda x, y, z: 2 * y, lambda x, y, z: 3 * z),
            (lambda x, y, z: x + y, lambda x, y, z: 2 * y + z, lambda x, y, z: 3 * z),
            (lambda x, y, z: x + y, lambda x, y, z: y, lambda x, y, z: 2 * z),
        ],
    )
    def test_degree_one(self, components):
        check = check_singF_p2(field(*components))

        assert check.degree == 1
        assert check.formula_total == 3
        assert check.oracle.total == 3
        assert check.agrees

    def test_diagonal_chart_change(self):
        X = field(lambda x, y, z: x, lambda x, y, z: 2 * y, lambda x, y, z: 3 * z)
        assert check_singF_p2(X).chart_change == (1, 2)

    def test_degree_two(self):
        X = field(lambda x, y, z: x ** 2, lambda x, y, z: y ** 2, lambda x, y, z: z ** 2)
        check = check_singF_p2(X)

        assert check.degree == 2
        assert check.formula_total == 7
        assert check.oracle.total == 7
        assert check.agrees

    def test_singular_curve(self):
        X = field(lambda x, y, z: x * z, lambda x, y, z: y * z, lambda x, y, z: 0 * z)
        assert has_singular_curve(X)
        assert has_singular_curve(radial_field(P2))

        with pytest.raises(InfinitelyManySingularities):
            check_singF_p2(X)
        with pytest.raises(InfinitelyManySingularities):
            check_singF_p2(radial_field(P2))

    def test_isolated_singularities(self):
        X = field(lambda x, y, z: x ** 2, lambda x, y, z: y ** 2, lambda x, y, z: z ** 2)
        assert not has_singular_curve(X)

    def test_limits(self):
        with pytest.raises(ValueError):
            check_singF_p2(field(lambda x, y, z: x ** 5, lambda x, y, z: y ** 5, lambda x, y, z: z ** 5))
        with pytest.raises(AmbientMismatch):
            check_singF_p2(radial_field((1, 1, 2)))

    def test_output_save(self):
        X = field(lambda x, y, z: x, lambda x, y, z: 2 * y, lambda x, y, z: 3 * z)
        check = check_singF_p2(X)
        dumpfn(check, "tmp.json")
        out = loadfn("tmp.json")
        os.remove("tmp.json")

        assert isinstance(out, P2SingularityCheck)
        assert out.agrees
        assert out.chart_change == (1, 2)


if __name__ == "__main__":
    pytest.main()
