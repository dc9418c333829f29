"""
Foliations on weighted projective spaces given by quasi-homogeneous vector fields.

A foliation of degree d on P(w) is induced by X = sum P_i d/dz_i with each P_i
quasi-homogeneous of weighted degree d + w_i - 1. Adding g * R_w, R_w the
radial field, does not change the foliation.

"""

from monty.json import MSONable

from pywpfol.errors import (
    AmbientMismatch,
    InconsistentDegrees,
    DegreeMismatch,
    ZeroVectorField,
    ZeroPolynomial,
)
from pywpfol.polynomial import (
    WeightSystem,
    QHPolynomial,
    ProjectivePoint,
    weighted_degree,
    partial_derivative,
    divmod_poly,
    divides,
)

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"


def _infer_degree(components, ambient):
    degrees = {}
    for i, comp in enumerate(components):
        if not comp.is_zero():
            degrees[i] = weighted_degree(comp) - ambient[i] + 1

    if not degrees:
        raise ZeroVectorField("A vector field needs a nonzero component.")

    if len(set(degrees.values())) > 1:
        detail = ", ".join("dx%i -> %i" % (i, d) for i, d in sorted(degrees.items()))
        raise InconsistentDegrees("Components imply different foliation degrees: %s." % detail)

    return next(iter(degrees.values()))


class VectorField(MSONable):
    def __init__(self, components, ambient=None, degree=None):
        """
        Quasi-homogeneous vector field X = sum P_i d/dz_i on P(w).

        Args:
            components (list): n+1 QHPolynomial, zero components allowed.
            ambient (WeightSystem): Defaults to the components' ambient.
            degree (int): Optional asserted foliation degree, checked against
                the components.

        """

        components = list(components)
        if not components:
            raise ZeroVectorField("A vector field needs components.")

        if ambient is None:
            ambient = components[0].ambient
        elif not isinstance(ambient, WeightSystem):
            ambient = WeightSystem(ambient)

        if len(components) != len(ambient):
            raise AmbientMismatch(
                "%i components given for %i coordinates." % (len(components), len(ambient))
            )
        for comp in components:
            if comp.ambient != ambient:
                raise AmbientMismatch("Component %s does not live on %r." % (comp, ambient))

        found = _infer_degree(components, ambient)
        if degree is not None and degree != found:
            raise InconsistentDegrees(
                "Asserted degree %i but components have degree %i." % (degree, found)
            )

        self.components = tuple(components)
        self.ambient = ambient
        self.degree = found

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        return (
            isinstance(other, VectorField)
            and self.ambient == other.ambient
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.ambient, self.components))

    def __repr__(self):
        return "VectorField(%s; degree %i)" % (
            ", ".join(str(c) for c in self.components),
            self.degree,
        )

    def plus_radial(self, g):
        """
        X + g * R_w, a field defining the same foliation.

        Args:
            g (QHPolynomial): Zero or of weighted degree d - 1; scalars are
                constants.

        Raises:
            DegreeMismatch: if g is nonzero of another weighted degree.

        """

        if not isinstance(g, QHPolynomial):
            g = QHPolynomial.constant(g, self.ambient)
        if g.ambient != self.ambient:
            raise AmbientMismatch("g lives on %r, the field on %r." % (g.ambient, self.ambient))
        if not g.is_zero() and weighted_degree(g) != self.degree - 1:
            raise DegreeMismatch(
                "g must have weighted degree d - 1 = %i, got %i." % (self.degree - 1, weighted_degree(g))
            )
        radial = radial_field(self.ambient)
        return VectorField([p + g * r for p, r in zip(self.components, radial)], self.ambient)

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "ambient": list(self.ambient.weights),
            "components": [c.as_dict() for c in self.components],
            "degree": self.degree,
        }

    @classmethod
    def from_dict(cls, d):
        ambient = WeightSystem(d["ambient"])
        components = [QHPolynomial.from_dict(c) for c in d["components"]]
        return cls(components, ambient, degree=d.get("degree"))


class InvarianceResult(MSONable):
    def __init__(self, invariant, cofactor=None, remainder=None):
        """
        Outcome of an invariance test.

        Args:
            invariant (bool): Whether f divides X(f).
            cofactor (QHPolynomial): g with X(f) = g*f, when invariant.
            remainder (QHPolynomial): Division remainder of X(f) by f; nonzero
                remainders witness non-invariance.

        """

        self.invariant = invariant
        self.cofactor = cofactor
        self.remainder = remainder

    def __bool__(self):
        return bool(self.invariant)

    def __repr__(self):
        if self.invariant:
            return "Invariant(cofactor=%s)" % self.cofactor
        return "NotInvariant(remainder=%s)" % self.remainder


def radial_field(w):
    """The adapted radial field R_w = sum w_i z_i d/dz_i, of degree 1."""

    if not isinstance(w, WeightSystem):
        w = WeightSystem(w)
    components = [QHPolynomial.variable(i, w, coeff=wi) for i, wi in enumerate(w)]
    return VectorField(components, w, degree=1)


def foliation_degree(X, ambient=None):
    """
    Foliation degree d of a field.

    Args:
        X (VectorField or list): A field, or raw components (checked here).
        ambient (WeightSystem): Ambient for raw components.

    Returns:
        int

    """

    if isinstance(X, VectorField):
        return X.degree

    components = list(X)
    if not components:
        raise ZeroVectorField("A vector field needs components.")
    if ambient is None:
        ambient = components[0].ambient
    return _infer_degree(components, ambient)


def degree_condition_ok(w, d):
    """True iff d > 1 - max_{i<j}(w_i + w_j)."""

    weights = sorted(w, reverse=True)
    return d > 1 - (weights[0] + weights[1])


def apply_field(X, f):
    """X(f) = sum P_i df/dz_i."""

    if f.ambient != X.ambient:
        raise AmbientMismatch("Field on %r cannot act on %s." % (X.ambient, f))

    result = QHPolynomial.zero(X.ambient)
    for i, comp in enumerate(X.components):
        if comp.is_zero():
            continue
        result = result + comp * partial_derivative(f, i)
    return result


def is_invariant(X, f):
    """
    Whether {f = 0} is invariant by the foliation of X, i.e. f divides X(f).

    Returns:
        InvarianceResult

    """

    if f.is_zero():
        raise ZeroPolynomial("The zero polynomial does not define a hypersurface.")

    image = apply_field(X, f)
    quotient, remainder = divmod_poly(image, f)

    if remainder.is_zero():
        return InvarianceResult(True, cofactor=quotient, remainder=remainder)
    return InvarianceResult(False, remainder=remainder)


def same_foliation(X, Y):
    """
    Cofactor g with Y - X = g * R_w, or None.

    Returns:
        QHPolynomial or None: the zero polynomial when X == Y.

    """

    if X.ambient != Y.ambient:
        raise AmbientMismatch("Fields live on %r and %r." % (X.ambient, Y.ambient))
    if X.degree != Y.degree:
        raise DegreeMismatch("Foliation degrees %i and %i differ." % (X.degree, Y.degree))

    radial = radial_field(X.ambient)
    differences = [y - x for x, y in zip(X.components, Y.components)]

    g = QHPolynomial.zero(X.ambient)
    for diff, r in zip(differences, radial):
        if not diff.is_zero():
            g = divides(r, diff)
            if g is None:
                return None
            break

    for diff, r in zip(differences, radial):
        if diff != g * r:
            return None
    return g


def singular_at_point(X, p):
    """
    Whether p is a singular point of the foliation, i.e. X(p) is parallel to R_w(p).

    Args:
        X (VectorField): Field.
        p (ProjectivePoint or list): Point with a nonzero coordinate.

    Returns:
        bool

    """

    if not isinstance(p, ProjectivePoint):
        p = ProjectivePoint(p)
    if len(p) != len(X.ambient):
        raise AmbientMismatch("Point %r does not live on %r." % (p, X.ambient))

    coords = p.coordinates
    values = [comp.evaluate(coords) for comp in X.components]
    radial = [w * c for w, c in zip(X.ambient, coords)]

    size = len(coords)
    for i in range(size):
        for j in range(i + 1, size):
            if values[i] * radial[j] - values[j] * radial[i] != 0:
                return False
    return True
