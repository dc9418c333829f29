"""
Independent Milnor-number oracles.

These count singular points with multiplicity without going through the
Baum-Bott formulas: a product formula for pure-power local models and a
resultant count of common zeros of two affine polynomials, which on P^2 checks
the total Milnor sum of a foliation chart by chart.

"""

from enum import Enum
from fractions import Fraction

import sympy as sp

from monty.json import MSONable

from pywpfol.bounds import milnor_sum_total
from pywpfol.errors import (
    AmbientMismatch,
    CommonFactor,
    InfinitelyManySingularities,
    OracleFailure,
    ShearExhausted,
    ZeroPolynomial,
)
from pywpfol.foliation import VectorField
from pywpfol.polynomial import WeightSystem, QHPolynomial
from pywpfol.settings import SHEAR_CONSTANTS, CHART_CHANGES, P2_ORACLE_MAX_DEGREE
from pywpfol.utils import get_logger, rational_to_dict, rational_from_dict

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"

logger = get_logger(__name__)

P2 = WeightSystem((1, 1, 1))
AFFINE_PLANE = WeightSystem((1, 1))

_x, _y, _z = sp.symbols("x y z")


class OracleMethod(Enum):
    PRODUCT_FORMULA = "ProductFormula"
    BIVARIATE_RESULTANT = "BivariateResultant"


class OracleResult(MSONable):
    def __init__(self, total, method, details=None):
        """
        Number of zeros counted with multiplicity.

        Args:
            total (Fraction): Total count, >= 0.
            method (OracleMethod): How it was obtained.
            details (list): For resultants, one dict per irreducible factor
                with "factor", "multiplicity" and "degree", plus the shears used.

        """

        self.total = Fraction(total)
        self.method = method
        self.details = details or []

    def __repr__(self):
        return "OracleResult(%s, %s)" % (self.total, self.method.value)

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "total": rational_to_dict(self.total),
            "method": self.method.value,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(rational_from_dict(d["total"]), OracleMethod(d["method"]), d.get("details"))


def milnor_product_oracle(exponents):
    """
    Milnor number of (z_0^m_0, ..., z_n^m_n) at the origin: prod m_i.

    Args:
        exponents (list): Positive integers m_i.

    Returns:
        int

    """

    total = 1
    for m in exponents:
        if int(m) != m or m < 1:
            raise ValueError("Exponents must be positive integers, got %r." % (m,))
        total *= int(m)
    return total


def _to_sympy(p):
    """Expression in x, y of a two-variable polynomial."""

    expr = sp.Integer(0)
    for (i, j), c in p.terms.items():
        expr += sp.Rational(c.numerator, c.denominator) * _x ** i * _y ** j
    return expr


def _top_form_at(p, c):
    """Top homogeneous part of p evaluated at (c, 1): the y-leading coefficient after x -> x + c*y."""
    return p.homogeneous_part(p.total_degree()).evaluate([c, 1])


def _resultant_count(P, Q, c):
    sheared_p = sp.expand(_to_sympy(P).subs(_x, _x + c * _y))
    sheared_q = sp.expand(_to_sympy(Q).subs(_x, _x + c * _y))

    res = sp.Poly(sp.resultant(sheared_p, sheared_q, _y), _x, domain="QQ")
    if res.is_zero:
        raise CommonFactor("%s and %s share a common factor." % (P, Q))
    return res


def bivariate_intersection_total(P, Q, shears=SHEAR_CONSTANTS):
    """
    Common zeros of P and Q in the affine plane, counted with multiplicity.

    After the shear x -> x + c*y both polynomials have constant leading
    coefficient in y, so no zero escapes to infinity in the y direction and
    the x-degree of Res_y counts every affine zero. Shears c with a vanishing
    top form at (c, 1) are skipped; the first two usable ones must agree.

    Args:
        P (QHPolynomial): Two-variable polynomial.
        Q (QHPolynomial): Two-variable polynomial.
        shears (list): Candidate shear constants, tried in order.

    Returns:
        OracleResult

    """

    for p in (P, Q):
        if p.num_vars != 2:
            raise AmbientMismatch("The resultant oracle needs two variables, got %i." % p.num_vars)
        if p.is_zero():
            raise ZeroPolynomial("The resultant oracle needs nonzero polynomials.")

    counts = []
    for c in shears:
        if _top_form_at(P, c) == 0 or _top_form_at(Q, c) == 0:
            logger.debug("Shear %s is degenerate for %s, %s." % (c, P, Q))
            continue

        res = _resultant_count(P, Q, c)
        counts.append((c, res))
        if len(counts) == 2:
            break

    if len(counts) < 2:
        raise ShearExhausted(
            "Fewer than two usable shears among %s for %s and %s." % (tuple(shears), P, Q)
        )

    (c1, res1), (c2, res2) = counts
    if res1.degree() != res2.degree():
        raise OracleFailure(
            "Shears %s and %s give %i and %i zeros." % (c1, c2, res1.degree(), res2.degree())
        )

    _, factors = sp.factor_list(res1)
    details = [
        {
            "factor": str(f.as_expr()),
            "multiplicity": int(k),
            "degree": int(f.degree()),
        }
        for f, k in factors
    ]
    details.append({"shears": [c1, c2]})

    return OracleResult(res1.degree(), OracleMethod.BIVARIATE_RESULTANT, details)


def transform_field(X, c1, c2):
    """
    Field in the coordinates u = (z0, z1, z2 + c1*z0 + c2*z1) of P^2.

    Args:
        X (VectorField): Field on P^2.
        c1 (int): Coefficient of z0.
        c2 (int): Coefficient of z1.

    Returns:
        VectorField

    """

    if X.ambient != P2:
        raise AmbientMismatch("Chart changes are implemented on P^2 only, got %r." % X.ambient)

    u = [QHPolynomial.variable(i, P2) for i in range(3)]
    inverse = [u[0], u[1], u[2] - c1 * u[0] - c2 * u[1]]

    x0, x1, x2 = X.components
    pushed = [x0, x1, x2 + c1 * x0 + c2 * x1]
    return VectorField([p.compose(inverse) for p in pushed], P2)


def _binary_form(p):
    """p(x, y, 0) as a sympy expression."""

    expr = sp.Integer(0)
    for (i, j, k), c in p.terms.items():
        if k == 0:
            expr += sp.Rational(c.numerator, c.denominator) * _x ** i * _y ** j
    return expr


def singularities_at_infinity(X):
    """
    Whether Sing(F) meets the line {z2 = 0} of P^2.

    On that line X is parallel to the radial field iff X2 and x*X1 - y*X0
    vanish, so there is a singular point iff the two binary forms have a
    common root, i.e. a non-constant (or zero) gcd.

    """

    x0, x1, x2 = X.components
    minor = sp.expand(_binary_form(x0) * _y - _binary_form(x1) * _x)
    g = sp.gcd(minor, _binary_form(x2))

    if g == 0:
        return True
    return sp.Poly(g, _x, _y).total_degree() > 0


def _ternary_form(p):
    expr = sp.Integer(0)
    for (i, j, k), c in p.terms.items():
        expr += sp.Rational(c.numerator, c.denominator) * _x ** i * _y ** j * _z ** k
    return expr


def has_singular_curve(X):
    """
    Whether Sing(F) on P^2 contains a curve.

    Sing(F) is cut out by the 2x2 minors of (X, R); it has a one-dimensional
    component iff the three minors share a non-constant factor (or all vanish).

    """

    x0, x1, x2 = [_ternary_form(p) for p in X.components]
    minors = [
        sp.expand(x0 * _y - x1 * _x),
        sp.expand(x0 * _z - x2 * _x),
        sp.expand(x1 * _z - x2 * _y),
    ]
    g = sp.gcd(sp.gcd(minors[0], minors[1]), minors[2])

    if g == 0:
        return True
    return sp.Poly(g, _x, _y, _z).total_degree() > 0


def _affine_chart(p):
    """p(x, y, 1) on the affine plane."""

    x = QHPolynomial.variable(0, AFFINE_PLANE)
    y = QHPolynomial.variable(1, AFFINE_PLANE)
    one = QHPolynomial.constant(1, AFFINE_PLANE)
    return p.compose([x, y, one])


class P2SingularityCheck(MSONable):
    def __init__(self, degree, formula_total, oracle, chart_change):
        """
        Comparison of the Baum-Bott total with the resultant count on P^2.

        Args:
            degree (int): Foliation degree d.
            formula_total (Fraction): d^2 + d + 1 from the Milnor sum formula.
            oracle (OracleResult): Count in the affine chart z2 = 1.
            chart_change (list): (c1, c2) used to clear the line at infinity.

        """

        self.degree = degree
        self.formula_total = Fraction(formula_total)
        self.oracle = oracle
        self.chart_change = tuple(chart_change)

    @property
    def agrees(self):
        return self.oracle.total == self.formula_total

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "degree": self.degree,
            "formula_total": rational_to_dict(self.formula_total),
            "oracle": self.oracle.as_dict(),
            "chart_change": list(self.chart_change),
            "agrees": self.agrees,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["degree"],
            rational_from_dict(d["formula_total"]),
            OracleResult.from_dict(d["oracle"]),
            d["chart_change"],
        )


def check_singF_p2(X, chart_changes=CHART_CHANGES):
    """
    Check the Milnor sum of a foliation on P^2 against the resultant oracle.

    A chart change moves every singular point into the chart z2 = 1, where
    the foliation is (X0 - x*X2) d/dx + (X1 - y*X2) d/dy.

    Args:
        X (VectorField): Field on P(1, 1, 1) of degree at most 3.
        chart_changes (list): Candidate (c1, c2), tried in order.

    Returns:
        P2SingularityCheck

    """

    if X.ambient != P2:
        raise AmbientMismatch("check_singF_p2 needs P(1,1,1), got %r." % X.ambient)
    if X.degree > P2_ORACLE_MAX_DEGREE:
        raise ValueError(
            "Degree %i is above the oracle limit %i." % (X.degree, P2_ORACLE_MAX_DEGREE)
        )

    if has_singular_curve(X):
        raise InfinitelyManySingularities("%r has a curve of singular points." % X)

    for c1, c2 in chart_changes:
        Y = transform_field(X, c1, c2)
        if singularities_at_infinity(Y):
            logger.debug("Chart change (%i, %i) leaves singular points at infinity." % (c1, c2))
            continue

        y0, y1, y2 = [_affine_chart(p) for p in Y.components]
        x = QHPolynomial.variable(0, AFFINE_PLANE)
        y = QHPolynomial.variable(1, AFFINE_PLANE)

        oracle = bivariate_intersection_total(y0 - x * y2, y1 - y * y2)
        check = P2SingularityCheck(X.degree, milnor_sum_total(P2, X.degree), oracle, (c1, c2))
        logger.debug(
            "P^2 check with chart change (%i, %i): oracle %s, formula %s."
            % (c1, c2, oracle.total, check.formula_total)
        )
        return check

    raise OracleFailure(
        "No chart change in %s clears the line at infinity for %r." % (tuple(chart_changes), X)
    )
