"""
Text formats: the polynomial grammar, field and hypersurface files, and JSON
reports.

Polynomials are written in the positional variables x0, ..., xn:

    poly  := [sign] term (sign term)*
    term  := [coeff '*'] factor ('*' factor)* | coeff
    factor:= var ['^' nat]
    coeff := nat ['/' nat]
    var   := 'x' nat

A field file starts with "weights: w0 ... wn" followed by "dx<i>: <poly>"
lines (missing components are zero); a hypersurface file has "f: <poly>"
instead. Blank lines and lines starting with '#' are ignored.

"""

import json

from fractions import Fraction

from monty.json import MSONable, jsanitize
from pyparsing import (
    Combine,
    Group,
    Literal,
    OneOrMore,
    Optional,
    ParseException,
    Suppress,
    Word,
    ZeroOrMore,
    col,
    lineno,
    nums,
    one_of,
)

from pywpfol.errors import (
    PolySyntaxError,
    VariableIndexOutOfRange,
    ZeroDenominator,
    InvalidWeights,
)
from pywpfol.foliation import VectorField
from pywpfol.polynomial import WeightSystem, QHPolynomial, weighted_degree

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"


class _Coefficient:
    def __init__(self, s, loc, toks):
        self.num = int(toks[0])
        self.den = int(toks[1]) if len(toks) > 1 else 1
        self.loc = loc


class _Factor:
    def __init__(self, s, loc, toks):
        self.index = int(toks[0])
        self.power = int(toks[1]) if len(toks) > 1 else 1
        self.loc = loc


def make_grammar():
    nat = Word(nums)
    variable = Suppress("x") + Word(nums)

    coefficient = nat + Optional(Suppress("/") + nat)
    factor = variable + Optional(Suppress("^") + nat)
    coefficient.set_parse_action(_Coefficient)
    factor.set_parse_action(_Factor)

    mul = Suppress("*")
    term = Group(Optional(coefficient + mul) + factor + ZeroOrMore(mul + factor)) | Group(
        coefficient
    )
    sign = one_of("+ -")

    return Optional(sign) + term + ZeroOrMore(sign + term)


POLY_GRAMMAR = make_grammar()

WEIGHTS_LINE = Suppress(Literal("weights") + Literal(":")) + OneOrMore(Word(nums))
COMPONENT_HEADER = Combine(Literal("dx") + Word(nums)) + Suppress(":")
HYPERSURFACE_HEADER = Literal("f") + Suppress(":")


def _ambient(weights, num_vars):
    if weights is not None:
        return weights if isinstance(weights, WeightSystem) else WeightSystem(weights)
    if num_vars is None:
        raise ValueError("Give either the weights or the number of variables.")
    if num_vars < 2:
        raise InvalidWeights("At least two variables are needed, got %i." % num_vars)
    return WeightSystem((1,) * num_vars)


def parse_poly(text, weights=None, num_vars=None, line=None, column_offset=0):
    """
    Parse a polynomial.

    Args:
        text (str): Polynomial text.
        weights (WeightSystem or list): Ambient weights.
        num_vars (int): Number of variables when no weights are given; the
            ambient then has all weights 1.
        line (int): Line number reported in errors (files).
        column_offset (int): Columns preceding text on its line (files).

    Returns:
        QHPolynomial: like terms combined, zero coefficients dropped.

    """

    ambient = _ambient(weights, num_vars)

    def where(loc):
        return (line if line is not None else lineno(loc, text), column_offset + col(loc, text))

    try:
        tokens = POLY_GRAMMAR.parse_string(text, parse_all=True)
    except ParseException as exc:
        here = where(exc.loc)
        raise PolySyntaxError("Invalid polynomial %r: %s" % (text.strip(), exc.msg), *here)

    terms = []
    sign = 1
    for tok in tokens:
        if isinstance(tok, str):
            sign = -1 if tok == "-" else 1
            continue

        coeff = Fraction(sign)
        exponents = [0] * len(ambient)
        for part in tok:
            if isinstance(part, _Coefficient):
                if part.den == 0:
                    raise ZeroDenominator("Zero denominator at line %i, column %i." % where(part.loc))
                coeff *= Fraction(part.num, part.den)
            else:
                if part.index >= len(ambient):
                    raise VariableIndexOutOfRange(
                        "x%i out of range for %i variables (line %i, column %i)."
                        % ((part.index, len(ambient)) + where(part.loc))
                    )
                exponents[part.index] += part.power
        terms.append((exponents, coeff))

    return QHPolynomial(terms, ambient)


def print_poly(p):
    """Canonical text of a polynomial, terms in decreasing graded lex order; "0" for zero."""
    return str(p)


def _significant_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield number, raw


def _parse_weights(lines):
    try:
        number, raw = next(lines)
    except StopIteration:
        raise PolySyntaxError("Missing 'weights:' line.", 1, 1)

    try:
        tokens = WEIGHTS_LINE.parse_string(raw, parse_all=True)
    except ParseException as exc:
        raise PolySyntaxError("Expected 'weights: w0 w1 ...': %s" % exc.msg, number, exc.col)
    return WeightSystem([int(t) for t in tokens])


def _split_header(header, number, raw):
    try:
        tokens = header.parse_string(raw)
    except ParseException as exc:
        raise PolySyntaxError("Unexpected line %r" % raw.strip(), number, exc.col)
    offset = raw.index(":") + 1
    return tokens[0], raw[offset:], offset


def parse_field_file(text):
    """
    Parse a field file.

    Returns:
        (WeightSystem, VectorField)

    """

    lines = _significant_lines(text)
    w = _parse_weights(lines)

    components = {}
    for number, raw in lines:
        name, body, offset = _split_header(COMPONENT_HEADER, number, raw)
        index = int(name[2:])
        if index >= len(w):
            raise VariableIndexOutOfRange(
                "Component %s out of range for %i variables (line %i)." % (name, len(w), number)
            )
        if index in components:
            raise PolySyntaxError("Component %s given twice." % name, number, 1)
        components[index] = parse_poly(body, w, line=number, column_offset=offset)

    field = VectorField(
        [components.get(i, QHPolynomial.zero(w)) for i in range(len(w))], w
    )
    return w, field


def parse_hypersurface_file(text):
    """
    Parse a hypersurface file.

    Returns:
        (WeightSystem, QHPolynomial): the polynomial is checked to be
            quasi-homogeneous and nonzero.

    """

    lines = _significant_lines(text)
    w = _parse_weights(lines)

    f = None
    for number, raw in lines:
        _, body, offset = _split_header(HYPERSURFACE_HEADER, number, raw)
        if f is not None:
            raise PolySyntaxError("Polynomial 'f' given twice.", number, 1)
        f = parse_poly(body, w, line=number, column_offset=offset)

    if f is None:
        raise PolySyntaxError("Missing 'f:' line.")

    weighted_degree(f)
    return w, f


def print_field_file(X):
    """Text of a field file; parse_field_file inverts it."""

    lines = ["weights: %s" % " ".join(str(w) for w in X.ambient)]
    for i, comp in enumerate(X.components):
        lines.append("dx%i: %s" % (i, print_poly(comp)))
    return "\n".join(lines) + "\n"


def print_hypersurface_file(f):
    """Text of a hypersurface file."""

    return "weights: %s\nf: %s\n" % (" ".join(str(w) for w in f.ambient), print_poly(f))


def read_field_file(filename):
    with open(filename, "r") as f:
        return parse_field_file(f.read())


def read_hypersurface_file(filename):
    with open(filename, "r") as f:
        return parse_hypersurface_file(f.read())


class Report(MSONable):
    def __init__(self, command, inputs, result, status, version=__version__):
        """
        JSON report of a command.

        Args:
            command (str): Subcommand name.
            inputs (dict): Echo of the inputs.
            result (dict): Payload; MSONable values are serialized with as_dict.
            status (str): e.g. "ok", "Satisfied", "pass".
            version (str): pywpfol version.

        """

        self.command = command
        self.inputs = inputs
        self.result = result
        self.status = status
        self.version = version

    def to_json(self):
        return json.dumps(jsanitize(self.as_dict(), strict=True), sort_keys=True)
