"""
Exact quasi-homogeneous polynomials on weighted projective spaces.

This module offers sparse polynomial arithmetic with exact rational
coefficients in the homogeneous coordinates z_0, ..., z_n of P(w_0, ..., w_n),
together with the counting and smoothness checks needed by the foliation and
bound modules.

"""

import math
import types

from enum import Enum
from fractions import Fraction
from functools import reduce

from monty.json import MSONable

from pywpfol.errors import (
    InvalidWeights,
    NotQuasiHomogeneous,
    ZeroPolynomial,
    AmbientMismatch,
    IndexOutOfRange,
    ZeroDivisor,
    ZeroPoint,
)
from pywpfol.utils import as_fraction, get_logger, rational_to_dict, rational_from_dict

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"

logger = get_logger(__name__)


class WeightSystem(MSONable):
    def __init__(self, weights):
        """
        Weights (w_0, ..., w_n) of a weighted projective space P(w).

        Args:
            weights (list): Positive integers, at least two of them.

        """

        weights = tuple(weights)

        if len(weights) < 2:
            raise InvalidWeights("A weight system needs at least two weights (n >= 1).")

        checked = []
        for w in weights:
            if isinstance(w, bool) or int(w) != w:
                raise InvalidWeights("Weights must be integers, got %r." % (w,))
            if int(w) < 1:
                raise InvalidWeights("Weights must be positive, got %r." % (w,))
            checked.append(int(w))

        self.weights = tuple(checked)

    @property
    def n(self):
        """Dimension of P(w)."""
        return len(self.weights) - 1

    def degree_of(self, exponents):
        """Weighted degree sum(w_i * k_i) of an exponent vector."""
        return sum(w * k for w, k in zip(self.weights, exponents))

    def product(self):
        return reduce(lambda a, b: a * b, self.weights, 1)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "WeightSystem(%s)" % (self.weights,)


def _as_weights(w):
    return w if isinstance(w, WeightSystem) else WeightSystem(w)


def _grlex_key(exponents):
    # total (unweighted) degree first, then lex
    return (sum(exponents), exponents)


def _format_coefficient(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%i/%i" % (c.numerator, c.denominator)


def _format_monomial(exponents):
    factors = []
    for i, k in enumerate(exponents):
        if k == 1:
            factors.append("x%i" % i)
        elif k > 1:
            factors.append("x%i^%i" % (i, k))
    return "*".join(factors)


class QHPolynomial(MSONable):
    def __init__(self, terms, ambient, degree=None):
        """
        Sparse polynomial in the homogeneous coordinates of P(w).

        The zero polynomial is the empty term map. Coefficients are exact
        rationals and zero coefficients are never stored. Quasi-homogeneity is
        not required (affine chart polynomials use this class too) unless a
        degree is asserted.

        Args:
            terms (dict): {exponent tuple: coefficient}, or an iterable of
                (exponents, coefficient) pairs. Repeated monomials are summed.
            ambient (WeightSystem or list): Weights of the ambient space.
            degree (int): Optional asserted weighted degree; every monomial is
                checked against it.

        """

        self.ambient = _as_weights(ambient)
        size = len(self.ambient)

        items = terms.items() if isinstance(terms, dict) else terms
        collected = {}
        for exponents, coeff in items:
            exponents = tuple(int(k) for k in exponents)
            if len(exponents) != size:
                raise AmbientMismatch(
                    "Exponent vector %s does not match %i variables." % (exponents, size)
                )
            if any(k < 0 for k in exponents):
                raise ValueError("Negative exponent in %s." % (exponents,))
            collected[exponents] = collected.get(exponents, 0) + as_fraction(coeff)

        self._terms = {e: c for e, c in collected.items() if c != 0}

        if degree is not None:
            for e in self._terms:
                if self.ambient.degree_of(e) != degree:
                    raise NotQuasiHomogeneous(
                        "Monomial %s has weighted degree %i, not the asserted %i."
                        % (_format_monomial(e) or "1", self.ambient.degree_of(e), degree)
                    )
        self.degree = degree

    @classmethod
    def constant(cls, c, ambient):
        ambient = _as_weights(ambient)
        return cls({(0,) * len(ambient): c}, ambient)

    @classmethod
    def zero(cls, ambient):
        return cls({}, ambient)

    @classmethod
    def variable(cls, i, ambient, coeff=1, power=1):
        """coeff * z_i^power."""

        ambient = _as_weights(ambient)
        if not 0 <= i < len(ambient):
            raise IndexOutOfRange("Variable index %i out of range." % i)
        exponents = [0] * len(ambient)
        exponents[i] = power
        return cls({tuple(exponents): coeff}, ambient)

    @property
    def terms(self):
        """Read-only view of the term map."""
        return types.MappingProxyType(self._terms)

    @property
    def num_vars(self):
        return len(self.ambient)

    def is_zero(self):
        return not self._terms

    def sorted_terms(self):
        """Terms in decreasing graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        """(exponents, coefficient) of the grlex-largest monomial."""

        if self.is_zero():
            raise ZeroPolynomial("The zero polynomial has no leading term.")
        lm = max(self._terms, key=_grlex_key)
        return lm, self._terms[lm]

    def total_degree(self):
        """Largest unweighted total degree, -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, k):
        """Terms of unweighted total degree k."""
        return QHPolynomial({e: c for e, c in self._terms.items() if sum(e) == k}, self.ambient)

    def weighted_degree(self):
        return weighted_degree(self)

    def derivative(self, i):
        return partial_derivative(self, i)

    def evaluate(self, values):
        """
        Exact value at a point.

        Args:
            values (list): One rational per variable.

        Returns:
            Fraction

        """

        values = [as_fraction(v) for v in values]
        if len(values) != self.num_vars:
            raise AmbientMismatch("Expected %i coordinates." % self.num_vars)

        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def compose(self, substitutions):
        """
        Substitute polynomials for the variables.

        Args:
            substitutions (list): One QHPolynomial per variable, all on the same
                ambient, which becomes the ambient of the result.

        Returns:
            QHPolynomial

        """

        if len(substitutions) != self.num_vars:
            raise AmbientMismatch("Expected %i substitutions." % self.num_vars)
        target = substitutions[0].ambient
        for s in substitutions:
            if s.ambient != target:
                raise AmbientMismatch("Substitutions live on different ambients.")

        powers = [{0: QHPolynomial.constant(1, target)} for _ in substitutions]

        def power(i, k):
            if k not in powers[i]:
                powers[i][k] = power(i, k - 1) * substitutions[i]
            return powers[i][k]

        result = QHPolynomial.zero(target)
        for e, c in self._terms.items():
            term = QHPolynomial.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def _coerce(self, other):
        if isinstance(other, QHPolynomial):
            if other.ambient != self.ambient:
                raise AmbientMismatch(
                    "Cannot combine polynomials on %r and %r." % (self.ambient, other.ambient)
                )
            return other
        return QHPolynomial.constant(as_fraction(other), self.ambient)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return QHPolynomial(terms, self.ambient)

    __radd__ = __add__

    def __neg__(self):
        return QHPolynomial({e: -c for e, c in self._terms.items()}, self.ambient)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QHPolynomial):
            c = as_fraction(other)
            return QHPolynomial({e: c * v for e, v in self._terms.items()}, self.ambient)

        other = self._coerce(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return QHPolynomial(terms, self.ambient)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Only non-negative integer powers are supported.")
        result = QHPolynomial.constant(1, self.ambient)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QHPolynomial):
            return self.ambient == other.ambient and self._terms == other._terms
        try:
            return self._terms == QHPolynomial.constant(as_fraction(other), self.ambient)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        # Constants compare equal to scalars, so they must hash like them
        if not self._terms:
            return hash(Fraction(0))
        if set(self._terms) == {(0,) * self.num_vars}:
            return hash(next(iter(self._terms.values())))
        return hash((self.ambient, frozenset(self._terms.items())))

    def __str__(self):
        if self.is_zero():
            return "0"

        pieces = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = _format_monomial(e)
            magnitude = abs(c)
            if not mono:
                body = _format_coefficient(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = "%s*%s" % (_format_coefficient(magnitude), mono)

            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)

        return " ".join(pieces)

    def __repr__(self):
        return "QHPolynomial(%s, %r)" % (self, self.ambient)

    def as_dict(self):
        d = {}
        d["@module"] = self.__class__.__module__
        d["@class"] = self.__class__.__name__
        d["@version"] = __version__
        d["ambient"] = list(self.ambient.weights)
        d["terms"] = [[list(e), rational_to_dict(c)] for e, c in self.sorted_terms()]
        d["degree"] = self.degree
        return d

    @classmethod
    def from_dict(cls, d):
        terms = [(tuple(e), rational_from_dict(c)) for e, c in d["terms"]]
        return cls(terms, WeightSystem(d["ambient"]), degree=d.get("degree"))


class ProjectivePoint(MSONable):
    def __init__(self, coordinates):
        """
        Point [p_0 : ... : p_n] with exact rational homogeneous coordinates.

        Args:
            coordinates (list): Rationals, not all zero.

        """

        coordinates = tuple(as_fraction(c) for c in coordinates)
        if all(c == 0 for c in coordinates):
            raise ZeroPoint("A projective point needs a nonzero coordinate.")
        self.coordinates = coordinates

    def rescale(self, lam, weights):
        """Weighted C*-action (lam^w_i p_i)."""

        lam = as_fraction(lam)
        if lam == 0:
            raise ValueError("The rescaling factor must be nonzero.")
        weights = _as_weights(weights)
        return ProjectivePoint([lam ** w * p for w, p in zip(weights, self.coordinates)])

    def __len__(self):
        return len(self.coordinates)

    def __iter__(self):
        return iter(self.coordinates)

    def __repr__(self):
        return "[%s]" % ":".join(_format_coefficient(c) for c in self.coordinates)

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "coordinates": [rational_to_dict(c) for c in self.coordinates],
        }

    @classmethod
    def from_dict(cls, d):
        return cls([rational_from_dict(c) for c in d["coordinates"]])


class QuasiSmoothness(Enum):
    QUASI_SMOOTH = "QuasiSmooth"
    NOT_QUASI_SMOOTH = "NotQuasiSmooth"
    UNDETERMINED = "Undetermined"


def weighted_degree(f, w=None):
    """
    Weighted degree of a quasi-homogeneous polynomial.

    Args:
        f (QHPolynomial): Nonzero polynomial.
        w (WeightSystem): Weights to measure with, defaults to f's ambient.

    Returns:
        int: d with sum(w_i k_i) = d for every monomial.

    """

    if f.is_zero():
        raise ZeroPolynomial("The zero polynomial has no weighted degree.")

    w = f.ambient if w is None else _as_weights(w)
    if len(w) != f.num_vars:
        raise AmbientMismatch("Weights %r do not match %i variables." % (w, f.num_vars))

    degrees = {w.degree_of(e) for e in f.terms}
    if len(degrees) > 1:
        raise NotQuasiHomogeneous(
            "Monomials of %s have weighted degrees %s." % (f, sorted(degrees))
        )
    return degrees.pop()


def partial_derivative(f, i):
    """Formal partial derivative df/dz_i."""

    if not 0 <= i < f.num_vars:
        raise IndexOutOfRange("No variable x%i in %i variables." % (i, f.num_vars))

    terms = {}
    for e, c in f.terms.items():
        k = e[i]
        if k:
            de = list(e)
            de[i] = k - 1
            terms[tuple(de)] = c * k
    return QHPolynomial(terms, f.ambient)


def divmod_poly(p, f):
    """
    Single-divisor multivariate division under graded lex order.

    Args:
        p (QHPolynomial): Dividend.
        f (QHPolynomial): Nonzero divisor.

    Returns:
        (QHPolynomial, QHPolynomial): q, r with p = q*f + r and no monomial of r
            divisible by the leading monomial of f.

    """

    if f.is_zero():
        raise ZeroDivisor("Division by the zero polynomial.")
    if p.ambient != f.ambient:
        raise AmbientMismatch("Cannot divide across ambients %r and %r." % (p.ambient, f.ambient))

    lm_f, lc_f = f.leading_term()
    work = dict(p.terms)
    quotient = {}
    remainder = {}

    while work:
        lm = max(work, key=_grlex_key)
        lc = work[lm]

        if all(a >= b for a, b in zip(lm, lm_f)):
            shift = tuple(a - b for a, b in zip(lm, lm_f))
            coeff = lc / lc_f
            quotient[shift] = coeff

            for e, c in f.terms.items():
                key = tuple(a + b for a, b in zip(shift, e))
                value = work.get(key, 0) - coeff * c
                if value == 0:
                    work.pop(key, None)
                else:
                    work[key] = value
        else:
            remainder[lm] = lc
            del work[lm]

    return QHPolynomial(quotient, p.ambient), QHPolynomial(remainder, p.ambient)


def divides(f, p):
    """
    Quotient p / f if f divides p, else None.

    Over a field a single divisor is a Groebner basis of its ideal, so the
    division remainder vanishes exactly when f divides p.

    """

    q, r = divmod_poly(p, f)
    return q if r.is_zero() else None


def sections_dimension(w, d):
    """
    dim H^0(P(w), O(d)): number of monomials of weighted degree d.

    Counted by the coin-change recursion over the weights.

    """

    w = _as_weights(w)
    if d < 0:
        return 0

    ways = [1] + [0] * d
    for weight in w:
        for total in range(weight, d + 1):
            ways[total] += ways[total - weight]
    return ways[d]


def monomials_of_degree(w, d):
    """Exponent vectors of weighted degree d, in lex order."""

    w = _as_weights(w).weights

    def extend(i, remaining):
        if i == len(w) - 1:
            if remaining % w[i] == 0:
                yield (remaining // w[i],)
            return
        for k in range(remaining // w[i] + 1):
            for rest in extend(i + 1, remaining - k * w[i]):
                yield (k,) + rest

    if d < 0:
        return []
    return list(extend(0, d))


def random_qh_polynomial(rng, w, d, max_terms=6, coeff_range=9):
    """
    Random quasi-homogeneous polynomial of weighted degree d.

    Args:
        rng (numpy.random.Generator): Source of randomness.
        w (WeightSystem): Weights.
        d (int): Weighted degree; must admit at least one monomial.
        max_terms (int): Largest number of terms.
        coeff_range (int): Coefficients are nonzero integers in [-coeff_range, coeff_range].

    Returns:
        QHPolynomial

    """

    w = _as_weights(w)
    monomials = monomials_of_degree(w, d)
    if not monomials:
        raise ValueError("No monomial of weighted degree %i on %r." % (d, w))

    size = int(rng.integers(1, min(max_terms, len(monomials)) + 1))
    chosen = rng.choice(len(monomials), size=size, replace=False)
    terms = {}
    for idx in chosen:
        c = 0
        while c == 0:
            c = int(rng.integers(-coeff_range, coeff_range + 1))
        terms[monomials[int(idx)]] = c
    return QHPolynomial(terms, w, degree=d)


def well_formed(w):
    """True iff every n-element subset of the weights has gcd 1."""

    w = _as_weights(w).weights
    for i in range(len(w)):
        others = w[:i] + w[i + 1:]
        if reduce(math.gcd, others) != 1:
            return False
    return True


def is_quasi_smooth_restricted(f):
    """
    Decide quasi-smoothness of Pham-Brieskorn polynomials sum c_i z_i^m_i.

    Returns:
        QuasiSmoothness: QUASI_SMOOTH iff every variable carries a pure power,
            NOT_QUASI_SMOOTH if one is missing (the gradient vanishes on its
            axis), UNDETERMINED for any other shape.

    """

    if f.is_zero():
        raise ZeroPolynomial("Quasi-smoothness of the zero polynomial is undefined.")

    seen = set()
    for e in f.terms:
        support = [i for i, k in enumerate(e) if k]
        if len(support) != 1 or support[0] in seen:
            return QuasiSmoothness.UNDETERMINED
        seen.add(support[0])

    if len(seen) == f.num_vars:
        return QuasiSmoothness.QUASI_SMOOTH

    logger.debug(
        "Variables %s do not appear in %s; it is singular along their axes."
        % (sorted(set(range(f.num_vars)) - seen), f)
    )
    return QuasiSmoothness.NOT_QUASI_SMOOTH
