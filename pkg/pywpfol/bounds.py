"""
Baum-Bott sums and the Poincare degree bound on weighted projective spaces.

Everything here is exact: symmetric functions of the weights, the Milnor sums
over Sing(F) and over Sing(F) on an invariant hypersurface, the auxiliary
polynomials Psi, Omega_n, P_m, Q_m, and a bisection enclosure of alpha_n, the
positive root of R_n(x) = x(x+1)^n - 2.

"""

import math

from enum import Enum
from fractions import Fraction

from monty.json import MSONable

from pywpfol.errors import (
    IndexOutOfRange,
    DimensionTooSmall,
    DegreeConditionViolated,
)
from pywpfol.foliation import degree_condition_ok
from pywpfol.polynomial import WeightSystem
from pywpfol.settings import ALPHA_WIDTH, DECIMAL_PLACES
from pywpfol.utils import (
    get_logger,
    as_fraction,
    truncate_decimal,
    rational_to_dict,
    rational_from_dict,
)

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"

logger = get_logger(__name__)


def _weight_tuple(w):
    if isinstance(w, WeightSystem):
        return w.weights
    return tuple(int(x) for x in w)


def _product(values):
    result = 1
    for v in values:
        result *= v
    return result


def sigmas(w):
    """All elementary symmetric functions [sigma_0, ..., sigma_{n+1}] of the weights."""

    e = [1] + [0] * len(_weight_tuple(w))
    for wi in _weight_tuple(w):
        for j in range(len(e) - 1, 0, -1):
            e[j] += wi * e[j - 1]
    return e


def sigma(w, k):
    """
    k-th elementary symmetric function of the weights.

    Args:
        w (WeightSystem or list): Weights; plain sequences are accepted so that
            sub-tuples of a weight system can be used.
        k (int): 0 <= k <= len(w).

    Returns:
        int

    """

    values = sigmas(w)
    if not 0 <= k < len(values):
        raise IndexOutOfRange("sigma_%i is undefined for %i weights." % (k, len(values) - 1))
    return values[k]


def milnor_sum_total(w, d):
    """
    Sum of orbifold Milnor numbers over Sing(F) for a foliation of degree d.

    (1 / prod w_i) * sum_{j=0}^{n} (d-1)^{n-j} sigma_j(w)

    """

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    if not degree_condition_ok(w, d):
        raise DegreeConditionViolated("Degree %i is not a foliation degree on %r." % (d, w))

    n = w.n
    s = sigmas(w)
    total = sum((d - 1) ** (n - j) * s[j] for j in range(n + 1))
    return Fraction(total, w.product())


def milnor_sum_on_V(w, d, d0):
    """
    Sum of orbifold Milnor numbers over Sing(F) on an invariant hypersurface
    of degree d0.

    (1 / prod w_i) * sum_{j=0}^{n-1} [sum_{k=0}^{j} (-1)^k sigma_{j-k} d0^{k+1}] (d-1)^{n-1-j}

    """

    if d0 < 1:
        raise ValueError("The hypersurface degree must be positive, got %i." % d0)

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    n = w.n
    s = sigmas(w)

    total = 0
    for j in range(n):
        inner = sum((-1) ** k * s[j - k] * d0 ** (k + 1) for k in range(j + 1))
        total += inner * (d - 1) ** (n - 1 - j)
    return Fraction(total, w.product())


def chern_coefficient_V(w, d0, j):
    """Coefficient sum_{k=0}^{j} (-1)^k sigma_{j-k}(w) d0^k of c_j(V)."""

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    if not 0 <= j <= w.n - 1:
        raise IndexOutOfRange("c_%i(V) needs 0 <= j <= %i." % (j, w.n - 1))

    s = sigmas(w)
    return sum((-1) ** k * s[j - k] * d0 ** k for k in range(j + 1))


class UnivariatePoly(MSONable):
    def __init__(self, coefficients):
        """
        Dense univariate polynomial with exact rational coefficients.

        Args:
            coefficients (list): Coefficient of t^i at index i. Trailing zeros
                are stripped, so the zero polynomial has no coefficients.

        """

        coeffs = [as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __call__(self, t):
        t = as_fraction(t)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    evaluate = __call__

    def derivative(self):
        return UnivariatePoly([i * c for i, c in enumerate(self.coefficients)][1:])

    def divide_by_t(self):
        """p(t) / t, for p with p(0) = 0."""

        if self.coefficients and self.coefficients[0] != 0:
            raise ValueError("%s is not divisible by t." % self)
        return UnivariatePoly(self.coefficients[1:])

    def _coerce(self, other):
        if isinstance(other, UnivariatePoly):
            return other
        return UnivariatePoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = other.coefficients + (0,) * (size - len(other.coefficients))
        return UnivariatePoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly([])
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UnivariatePoly(product)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UnivariatePoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, UnivariatePoly):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        if self.is_zero():
            return "0"
        pieces = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else "t^%i" % i)
            magnitude = abs(c)
            if mono and magnitude == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (magnitude, mono)
            else:
                body = str(magnitude)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "coefficients": [rational_to_dict(c) for c in self.coefficients],
        }

    @classmethod
    def from_dict(cls, d):
        return cls([rational_from_dict(c) for c in d["coefficients"]])


def psi(w, d):
    """
    Psi(t) = sum_{j=0}^{n-1} (sum_{k=0}^{j} (-1)^k sigma_{j-k} t^{k+1}) (d-1)^{n-1-j}.

    Psi(d0) / prod w_i is the Milnor sum of Sing(F) on a degree d0 invariant
    hypersurface; 0^0 = 1 so d = 1 keeps only j = n-1.

    """

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    n = w.n
    if n < 2:
        raise DimensionTooSmall("Psi is defined for n >= 2, got n = %i." % n)

    s = sigmas(w)
    coeffs = [0] * (n + 1)
    for j in range(n):
        scale = (d - 1) ** (n - 1 - j)
        for k in range(j + 1):
            coeffs[k + 1] += (-1) ** k * s[j - k] * scale
    return UnivariatePoly(coeffs)


def omega_poly(w, d):
    """Omega_n: Psi' for odd n, (Psi / t)' for even n."""

    poly = psi(w, d)
    n = len(w) - 1
    if n % 2 == 0:
        poly = poly.divide_by_t()
    return poly.derivative()


def p_poly(m):
    """P_m(t) = sum_{j=0}^{m} (-1)^j (m+1-j) t^{m-j}, P_0 = 1."""

    if m < 0:
        raise IndexOutOfRange("P_m needs m >= 0, got %i." % m)

    coeffs = [0] * (m + 1)
    for j in range(m + 1):
        coeffs[m - j] = (-1) ** j * (m + 1 - j)
    return UnivariatePoly(coeffs)


def q_poly(m):
    """Q_m = P_m - P_{m-1}."""

    if m < 1:
        raise IndexOutOfRange("Q_m needs m >= 1, got %i." % m)
    return p_poly(m) - p_poly(m - 1)


def lemma_q_polynomial(m):
    """F(t) = (m+1)t^{m+2} + 2t^{m+1} - (m+1)t^m + 2(-1)^m, equal to (t+1)^2 Q_m(t)."""

    if m < 1:
        raise IndexOutOfRange("Q_m needs m >= 1, got %i." % m)

    coeffs = [0] * (m + 3)
    coeffs[0] = 2 * (-1) ** m
    coeffs[m] = -(m + 1)
    coeffs[m + 1] = 2
    coeffs[m + 2] = m + 1
    return UnivariatePoly(coeffs)


def omega_via_p(w, d, t):
    """
    Omega_n(t) through the P_m, with s = t / (d-1).

    odd n:  sum_{l=0}^{n-1} sigma_l (d-1)^{n-1-l} (-1)^{n-1-l} P_{n-1-l}(s)
    even n: sum_{l=0}^{n-2} sigma_l (d-1)^{n-2-l} (-1)^{n-1-l} P_{n-2-l}(s)

    """

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    n = w.n
    if n < 2:
        raise DimensionTooSmall("Omega_n is defined for n >= 2, got n = %i." % n)
    if d == 1:
        raise ValueError("The P_m form needs d != 1.")

    s_values = sigmas(w)
    s = as_fraction(t) / (d - 1)
    top = n - 1 if n % 2 else n - 2

    total = Fraction(0)
    for l in range(top + 1):
        total += (
            s_values[l] * Fraction(d - 1) ** (top - l) * (-1) ** (n - 1 - l) * p_poly(top - l)(s)
        )
    return total


def psi_closed_form_rhs(w, d, t):
    """t * sum_{l=0}^{n-1} sigma_l ((d-1)^{n-l} - (-t)^{n-l}), equal to Psi(t) (d-1+t)."""

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    n = w.n
    t = as_fraction(t)
    s = sigmas(w)
    return t * sum(s[l] * ((d - 1) ** (n - l) - (-t) ** (n - l)) for l in range(n))


def r_n(n, x):
    """R_n(x) = x(x+1)^n - 2."""

    if n < 1:
        raise DimensionTooSmall("R_n needs n >= 1, got %i." % n)
    x = as_fraction(x)
    return x * (x + 1) ** n - 2


def crossing_polynomial(n, a):
    """F(X) = (X+a)^n (X+a-1) - X^{n+1} - X^n, so t^n(t-sigma) - s^n(s+sigma) = sigma^{n+1} F(s/sigma)."""

    a = as_fraction(a)
    shifted = UnivariatePoly([a, 1])
    x_n = UnivariatePoly([0] * n + [1])
    return shifted ** n * UnivariatePoly([a - 1, 1]) - x_n * UnivariatePoly([1, 1])


def crossing_value_at_one(n, a):
    """F(1) = (1+a)^n a - 2, which is R_n(a)."""
    return crossing_polynomial(n, a)(1)


class RationalInterval(MSONable):
    def __init__(self, lo, hi):
        """
        Exact enclosure [lo, hi].

        Args:
            lo (Fraction): Lower endpoint.
            hi (Fraction): Upper endpoint, hi >= lo.

        """

        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            raise ValueError("Empty interval [%s, %s]." % (lo, hi))
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= as_fraction(x) <= self.hi

    def affine(self, offset, scale):
        """Image of the interval under x -> offset + scale * x, scale >= 0."""

        if scale < 0:
            raise ValueError("Only non-negative scales keep the endpoint order.")
        return RationalInterval(offset + scale * self.lo, offset + scale * self.hi)

    def decimal(self, places=DECIMAL_PLACES):
        """
        Outward decimal rendering: lo rounded down, hi rounded up.

        Returns:
            tuple: Two strings whose values enclose the interval.

        """

        scale = 10 ** places
        lo = Fraction(math.floor(self.lo * scale), scale)
        hi = Fraction(math.ceil(self.hi * scale), scale)
        return truncate_decimal(lo, places), truncate_decimal(hi, places)

    def __eq__(self, other):
        return isinstance(other, RationalInterval) and (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return "[%s, %s]" % (self.lo, self.hi)

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "lo": rational_to_dict(self.lo, DECIMAL_PLACES),
            "hi": rational_to_dict(self.hi, DECIMAL_PLACES),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(rational_from_dict(d["lo"]), rational_from_dict(d["hi"]))


def root_enclosure(n, width=ALPHA_WIDTH):
    """
    Bisection enclosure of the positive root of R_n.

    R_n is increasing on the positives with R_n(0) = -2 and R_n(2) > 0, so
    [0, 2] brackets the root.

    Args:
        n (int): n >= 1.
        width (Fraction): Largest accepted enclosure width.

    Returns:
        RationalInterval: with R_n(lo) < 0 < R_n(hi).

    """

    width = as_fraction(width)
    if width <= 0:
        raise ValueError("Enclosure width must be positive.")
    if n < 1:
        raise DimensionTooSmall("R_n needs n >= 1, got %i." % n)

    lo, hi = Fraction(0), Fraction(2)
    steps = 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        value = r_n(n, mid)
        steps += 1
        if value < 0:
            lo = mid
        elif value > 0:
            hi = mid
        else:
            # rational root (only n = 1); step off it on both sides
            lo, hi = mid - width / 2, mid + width / 2
            break

    logger.debug("Root of R_%i enclosed in %i bisection steps." % (n, steps))
    return RationalInterval(lo, hi)


def alpha_enclosure(n, width=ALPHA_WIDTH):
    """
    Enclosure of alpha_n: the positive root of R_n for odd n, alpha_{n-1} for even n.

    Args:
        n (int): n >= 3.
        width (Fraction): Largest accepted enclosure width.

    Returns:
        RationalInterval

    """

    if n < 3:
        raise DimensionTooSmall("alpha_n is defined for n >= 3, got %i." % n)
    return root_enclosure(n if n % 2 else n - 1, width)


def alpha_asymptotic_bounds(n):
    """
    Floats (lower, upper) with lower < root of R_n < upper for n >= 3.

    lower = max(2/(n+1), (ln n - ln ln n)/n), upper = ln(2n)/n.

    """

    if n < 3:
        raise DimensionTooSmall("The asymptotic bounds need n >= 3, got %i." % n)
    lower = max(2.0 / (n + 1), (math.log(n) - math.log(math.log(n))) / n)
    upper = math.log(2 * n) / n
    return lower, upper


class BoundCase(Enum):
    N2_EXACT = "N2Exact"
    NGE3_ALPHA = "NGe3Alpha"


class BoundStatus(Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"


class BoundReport(MSONable):
    def __init__(self, n, weights, foliation_degree, case, hypothesis_met, bound_value, sigma1,
                 alpha=None):
        """
        Outcome of evaluating the Poincare bound.

        Args:
            n (int): Dimension of P(w).
            weights (WeightSystem): Weights.
            foliation_degree (int): d.
            case (BoundCase): N2_EXACT iff n = 2.
            hypothesis_met (bool): d >= sigma_1 + 1 for n >= 3, True for n = 2.
            bound_value (int or RationalInterval): d + sigma_1 - 2 for n = 2,
                an enclosure of d - 1 + alpha_n sigma_1 (strict bound) for n >= 3.
            sigma1 (int): sigma_1(w).
            alpha (RationalInterval): alpha_n enclosure used, n >= 3.

        """

        self.n = n
        self.weights = weights
        self.foliation_degree = foliation_degree
        self.case = case
        self.hypothesis_met = hypothesis_met
        self.bound_value = bound_value
        self.sigma1 = sigma1
        self.alpha = alpha

    def as_dict(self):
        if isinstance(self.bound_value, RationalInterval):
            bound_value = self.bound_value.as_dict()
        else:
            bound_value = rational_to_dict(self.bound_value)

        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "n": self.n,
            "weights": list(self.weights.weights),
            "foliation_degree": self.foliation_degree,
            "case": self.case.value,
            "hypothesis_met": self.hypothesis_met,
            "bound_value": bound_value,
            "sigma1": self.sigma1,
            "alpha": self.alpha.as_dict() if self.alpha is not None else None,
        }

    @classmethod
    def from_dict(cls, d):
        if "@class" in d["bound_value"]:
            bound_value = RationalInterval.from_dict(d["bound_value"])
        else:
            bound_value = int(rational_from_dict(d["bound_value"]))

        return cls(
            d["n"],
            WeightSystem(d["weights"]),
            d["foliation_degree"],
            BoundCase(d["case"]),
            d["hypothesis_met"],
            bound_value,
            d["sigma1"],
            alpha=RationalInterval.from_dict(d["alpha"]) if d.get("alpha") else None,
        )


def poincare_bound(w, d, width=ALPHA_WIDTH):
    """
    Degree bound for invariant quasi-smooth hypersurfaces of a degree d foliation.

    n = 2: deg V <= d + sigma_1 - 2. n >= 3, under d >= sigma_1 + 1:
    deg V < d - 1 + alpha_n sigma_1.

    Args:
        w (WeightSystem): Weights, n >= 2.
        d (int): Foliation degree.
        width (Fraction): Width of the alpha_n enclosure.

    Returns:
        BoundReport

    """

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    n = w.n
    if n < 2:
        raise DimensionTooSmall("The bound is stated for n >= 2, got n = %i." % n)
    if not degree_condition_ok(w, d):
        raise DegreeConditionViolated("Degree %i is not a foliation degree on %r." % (d, w))

    s1 = sigma(w, 1)
    if n == 2:
        return BoundReport(n, w, d, BoundCase.N2_EXACT, True, d + s1 - 2, s1)

    alpha = alpha_enclosure(n, width)
    return BoundReport(
        n,
        w,
        d,
        BoundCase.NGE3_ALPHA,
        d >= s1 + 1,
        alpha.affine(d - 1, s1),
        s1,
        alpha=alpha,
    )


class BoundCheck(MSONable):
    def __init__(self, status, quotient=None, r_value=None, m=None):
        """
        Verdict of check_bound with its exact certificate.

        Args:
            status (BoundStatus): Verdict.
            quotient (Fraction): q = (d0 - d + 1) / sigma_1, n >= 3.
            r_value (Fraction): R_m(q) when q > 0.
            m (int): n for odd n, n - 1 for even n.

        """

        self.status = status
        self.quotient = quotient
        self.r_value = r_value
        self.m = m

    def __repr__(self):
        return "BoundCheck(%s)" % self.status.value

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "status": self.status.value,
            "quotient": rational_to_dict(self.quotient) if self.quotient is not None else None,
            "r_value": rational_to_dict(self.r_value) if self.r_value is not None else None,
            "m": self.m,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            BoundStatus(d["status"]),
            quotient=rational_from_dict(d["quotient"]) if d.get("quotient") else None,
            r_value=rational_from_dict(d["r_value"]) if d.get("r_value") else None,
            m=d.get("m"),
        )


def check_bound(w, d, d0):
    """
    Exact check of deg V = d0 against the bound.

    For n >= 3, d0 < d - 1 + alpha_m sigma_1 iff q < alpha_m iff R_m(q) < 0
    (q > 0), R_m being increasing on the positives.

    Returns:
        BoundCheck

    """

    if d0 < 1:
        raise ValueError("The hypersurface degree must be positive, got %i." % d0)

    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    n = w.n
    if n < 2:
        raise DimensionTooSmall("The bound is stated for n >= 2, got n = %i." % n)

    s1 = sigma(w, 1)
    if n == 2:
        ok = d0 <= d + s1 - 2
        return BoundCheck(BoundStatus.SATISFIED if ok else BoundStatus.VIOLATED)

    if d < s1 + 1:
        return BoundCheck(BoundStatus.HYPOTHESIS_NOT_MET)

    m = n if n % 2 else n - 1
    q = Fraction(d0 - d + 1, s1)
    if q <= 0:
        return BoundCheck(BoundStatus.SATISFIED, quotient=q, m=m)

    value = r_n(m, q)
    status = BoundStatus.SATISFIED if value < 0 else BoundStatus.VIOLATED
    return BoundCheck(status, quotient=q, r_value=value, m=m)
