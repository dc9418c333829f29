"""
Explicit foliations with invariant quasi-smooth hypersurfaces.

Given pairs (a_k, b_k), k = 0..n, of pairwise coprime integers with a common
sum xi, and zeta divisible by every a_k and b_k, set alpha_k = zeta / a_k and
beta_k = zeta / b_k. On P(a_0, b_0, ..., a_n, b_n) with coordinates
X_k = x_{2k}, Y_k = x_{2k+1} the field

    Z = sum_k beta_k Y_k^(beta_k - 1) d/dX_k - alpha_k X_k^(alpha_k - 1) d/dY_k

has degree zeta - xi + 1 and leaves V = {sum_k X_k^alpha_k + Y_k^beta_k = 0}
invariant. An extra weight a_{n+1} adds the variable X_{n+1} (last) and the
term X_{n+1}^(zeta / a_{n+1}) to V, with a zero component in Z.

"""

import math
import warnings

from functools import reduce

from monty.json import MSONable

from pywpfol.bounds import BoundStatus, check_bound, psi, sigma, sigmas
from pywpfol.errors import (
    DimensionTooSmall,
    InvalidWeights,
    NotPairwiseCoprime,
    UnequalPairSums,
    ExtraWeightNotCompatible,
    FamilyConstructionError,
)
from pywpfol.foliation import VectorField, is_invariant, singular_at_point
from pywpfol.polynomial import (
    WeightSystem,
    QHPolynomial,
    QuasiSmoothness,
    is_quasi_smooth_restricted,
    weighted_degree,
)
from pywpfol.utils import get_logger

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"

logger = get_logger(__name__)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class FamilySpec(MSONable):
    def __init__(self, pairs, extra_weight=None, multiplier=1):
        """
        Input data of the family.

        Args:
            pairs (list): (a_k, b_k) pairs, at least two of them.
            extra_weight (int): a_{n+1} of the even-dimensional variant.
            multiplier (int): zeta = multiplier * lcm of all listed integers.

        """

        pairs = tuple(tuple(int(x) for x in pair) for pair in pairs)

        if len(pairs) < 2:
            raise DimensionTooSmall(
                "The family needs at least two pairs (ambient dimension >= 3), got %i." % len(pairs)
            )
        for pair in pairs:
            if len(pair) != 2:
                raise ValueError("Pairs must have two entries, got %s." % (pair,))
            if min(pair) < 1:
                raise InvalidWeights("Pair entries must be positive, got %s." % (pair,))

        sums = {a + b for a, b in pairs}
        if len(sums) > 1:
            raise UnequalPairSums("Pair sums differ: %s." % sorted(sums))

        entries = [x for pair in pairs for x in pair]
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if math.gcd(entries[i], entries[j]) != 1:
                    raise NotPairwiseCoprime(
                        "%i and %i share the factor %i."
                        % (entries[i], entries[j], math.gcd(entries[i], entries[j]))
                    )

        if extra_weight is not None:
            extra_weight = int(extra_weight)
            if extra_weight < 1:
                raise InvalidWeights("The extra weight must be positive, got %i." % extra_weight)
            for x in entries:
                if math.gcd(extra_weight, x) != 1:
                    raise ExtraWeightNotCompatible(
                        "Extra weight %i shares a factor with %i." % (extra_weight, x)
                    )

        multiplier = int(multiplier)
        if multiplier < 1:
            raise ValueError("The multiplier must be positive, got %i." % multiplier)
        if multiplier != 1:
            warnings.warn("Multiplier %i: zeta is not the minimal choice." % multiplier)

        self.pairs = pairs
        self.extra_weight = extra_weight
        self.multiplier = multiplier

    @property
    def xi(self):
        return sum(self.pairs[0])

    @property
    def weights(self):
        """(a_0, b_0, ..., a_n, b_n[, a_{n+1}])."""

        weights = [x for pair in self.pairs for x in pair]
        if self.extra_weight is not None:
            weights.append(self.extra_weight)
        return tuple(weights)

    @property
    def zeta(self):
        return self.multiplier * reduce(_lcm, self.weights, 1)


class FamilyInstance(MSONable):
    def __init__(self, spec, weights, zeta, xi, exponents, field, hypersurface, foliation_degree):
        """
        A constructed member of the family.

        Args:
            spec (FamilySpec): Input data.
            weights (WeightSystem): Ambient weights.
            zeta (int): Weighted degree of V.
            xi (int): Common pair sum.
            exponents (list): zeta / w_i for every coordinate, in coordinate order.
            field (VectorField): Z.
            hypersurface (QHPolynomial): Defining polynomial of V.
            foliation_degree (int): zeta - xi + 1.

        """

        self.spec = spec
        self.weights = weights
        self.zeta = zeta
        self.xi = xi
        self.exponents = tuple(exponents)
        self.field = field
        self.hypersurface = hypersurface
        self.foliation_degree = foliation_degree

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "spec": self.spec.as_dict(),
            "weights": list(self.weights.weights),
            "zeta": self.zeta,
            "xi": self.xi,
            "exponents": list(self.exponents),
            "field": self.field.as_dict(),
            "hypersurface": self.hypersurface.as_dict(),
            "foliation_degree": self.foliation_degree,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            FamilySpec.from_dict(d["spec"]),
            WeightSystem(d["weights"]),
            d["zeta"],
            d["xi"],
            d["exponents"],
            VectorField.from_dict(d["field"]),
            QHPolynomial.from_dict(d["hypersurface"]),
            d["foliation_degree"],
        )


def generate_family(spec):
    """
    Build Z and V for a FamilySpec and check the construction.

    Returns:
        FamilyInstance

    Raises:
        FamilyConstructionError: if Z(f) != 0, the degree is not zeta - xi + 1
            or V is not quasi-smooth.

    """

    w = WeightSystem(spec.weights)
    zeta, xi = spec.zeta, spec.xi
    exponents = [zeta // wi for wi in w]

    components = []
    f = QHPolynomial.zero(w)
    for k in range(len(spec.pairs)):
        x, y = 2 * k, 2 * k + 1
        alpha, beta = exponents[x], exponents[y]
        components.append(QHPolynomial.variable(y, w, coeff=beta, power=beta - 1))
        components.append(QHPolynomial.variable(x, w, coeff=-alpha, power=alpha - 1))
        f = f + QHPolynomial.variable(x, w, power=alpha) + QHPolynomial.variable(y, w, power=beta)

    if spec.extra_weight is not None:
        last = len(w) - 1
        components.append(QHPolynomial.zero(w))
        f = f + QHPolynomial.variable(last, w, power=exponents[last])

    field = VectorField(components, w)
    result = is_invariant(field, f)

    if not result.invariant or not result.cofactor.is_zero():
        raise FamilyConstructionError("Z(f) does not vanish for %s." % (spec.pairs,))
    if field.degree != zeta - xi + 1:
        raise FamilyConstructionError(
            "Foliation degree %i differs from zeta - xi + 1 = %i." % (field.degree, zeta - xi + 1)
        )
    if is_quasi_smooth_restricted(f) != QuasiSmoothness.QUASI_SMOOTH:
        raise FamilyConstructionError("V is not quasi-smooth for %s." % (spec.pairs,))

    logger.debug(
        "Family %s: zeta %i, xi %i, deg F %i on %r." % (spec.pairs, zeta, xi, field.degree, w)
    )

    return FamilyInstance(spec, w, zeta, xi, exponents, field, f, field.degree)


class FamilyVerification(MSONable):
    def __init__(self, zeta, foliation_degree, xi, sigma1, invariant, cofactor_zero,
                 hypothesis_met, bound, degree_gap, psi_value, milnor_total, excess_b,
                 zeta_exceeds_product, singular_coordinate_points):
        """
        Checks run on a family instance.

        Args:
            zeta (int): deg V.
            foliation_degree (int): deg F.
            xi (int): Common pair sum.
            sigma1 (int): sigma_1 of the weights.
            invariant (bool): f divides Z(f).
            cofactor_zero (bool): Z(f) = 0.
            hypothesis_met (bool): deg F >= sigma_1 + 1.
            bound (BoundCheck): check_bound(w, deg F, deg V).
            degree_gap (int): deg V - deg F, which should be xi - 1.
            psi_value (int): Psi(deg V), prod w_i times the Milnor sum on V.
            milnor_total (int): sum_k (d-1)^{n-k} sigma_k, prod w_i times the
                Milnor sum over Sing(F).
            excess_b (int): milnor_total - psi_value.
            zeta_exceeds_product (bool): zeta >= prod a_k b_k, recorded only.
            singular_coordinate_points (list): Indices i with e_i in Sing(F).

        """

        self.zeta = zeta
        self.foliation_degree = foliation_degree
        self.xi = xi
        self.sigma1 = sigma1
        self.invariant = invariant
        self.cofactor_zero = cofactor_zero
        self.hypothesis_met = hypothesis_met
        self.bound = bound
        self.degree_gap = degree_gap
        self.psi_value = psi_value
        self.milnor_total = milnor_total
        self.excess_b = excess_b
        self.zeta_exceeds_product = zeta_exceeds_product
        self.singular_coordinate_points = list(singular_coordinate_points)

    @property
    def inequality_a(self):
        return self.psi_value >= 0

    @property
    def inequality_b(self):
        return self.excess_b >= 0

    @property
    def passed(self):
        return (
            self.invariant
            and self.cofactor_zero
            and self.hypothesis_met
            and self.bound.status == BoundStatus.SATISFIED
            and self.degree_gap == self.xi - 1
            and self.inequality_a
            and self.inequality_b
        )


def verify_family(inst):
    """
    Re-check a family instance against the degree bound.

    Returns:
        FamilyVerification

    """

    w = inst.weights
    n = w.n
    d = inst.field.degree
    zeta = weighted_degree(inst.hypersurface)

    result = is_invariant(inst.field, inst.hypersurface)
    s = sigmas(w)
    s1 = s[1]

    psi_value = psi(w, d)(zeta)
    milnor_total = sum((d - 1) ** (n - k) * s[k] for k in range(n + 1))

    pair_product = 1
    for a, b in inst.spec.pairs:
        pair_product *= a * b

    singular_points = []
    for i in range(len(w)):
        point = [0] * len(w)
        point[i] = 1
        if singular_at_point(inst.field, point):
            singular_points.append(i)

    report = FamilyVerification(
        zeta=zeta,
        foliation_degree=d,
        xi=inst.xi,
        sigma1=s1,
        invariant=result.invariant,
        cofactor_zero=result.invariant and result.cofactor.is_zero(),
        hypothesis_met=d >= sigma(w, 1) + 1,
        bound=check_bound(w, d, zeta),
        degree_gap=zeta - d,
        psi_value=int(psi_value),
        milnor_total=milnor_total,
        excess_b=milnor_total - int(psi_value),
        zeta_exceeds_product=zeta >= pair_product,
        singular_coordinate_points=singular_points,
    )

    logger.debug(
        "Verified family %s: bound %s, excess (b) %i."
        % (inst.spec.pairs, report.bound.status.value, report.excess_b)
    )
    return report


def random_family_spec(rng, num_pairs=2, xi_min=3, xi_max=30, extra=False, max_tries=1000):
    """
    Random valid FamilySpec with xi in [xi_min, xi_max].

    Args:
        rng (numpy.random.Generator): Source of randomness.
        num_pairs (int): Number of pairs.
        xi_min (int): Smallest pair sum.
        xi_max (int): Largest pair sum.
        extra (bool): Also draw a compatible extra weight.
        max_tries (int): Draws of xi before giving up.

    Returns:
        FamilySpec

    """

    for _ in range(max_tries):
        xi = int(rng.integers(xi_min, xi_max + 1))
        candidates = [a for a in range(1, xi) if math.gcd(a, xi) == 1]
        order = rng.permutation(len(candidates))

        chosen = []
        for idx in order:
            a = candidates[int(idx)]
            pair = (a, xi - a)
            if all(math.gcd(x, y) == 1 for x in pair for c in chosen for y in c) and a != xi - a:
                chosen.append(pair)
            if len(chosen) == num_pairs:
                break

        if len(chosen) < num_pairs:
            continue

        extra_weight = None
        if extra:
            used = [x for pair in chosen for x in pair]
            options = [e for e in range(2, 4 * xi) if all(math.gcd(e, x) == 1 for x in used)]
            if not options:
                continue
            extra_weight = options[int(rng.integers(len(options)))]

        return FamilySpec(chosen, extra_weight=extra_weight)

    raise RuntimeError("No valid family with %i pairs and xi <= %i found." % (num_pairs, xi_max))
