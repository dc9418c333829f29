"""
Exceptions raised by pywpfol.

Every error derives from PywpfolError and from the closest builtin, so code
that catches ValueError or IndexError keeps working.

"""

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"


class PywpfolError(Exception):
    """Base class for all pywpfol errors."""


class InvalidWeights(PywpfolError, ValueError):
    pass


class NotQuasiHomogeneous(PywpfolError, ValueError):
    pass


class ZeroPolynomial(PywpfolError, ValueError):
    pass


class AmbientMismatch(PywpfolError, ValueError):
    pass


class InconsistentDegrees(PywpfolError, ValueError):
    pass


class DegreeMismatch(PywpfolError, ValueError):
    pass


class ZeroVectorField(PywpfolError, ValueError):
    pass


class ZeroPoint(PywpfolError, ValueError):
    pass


class DegreeConditionViolated(PywpfolError, ValueError):
    pass


class DimensionTooSmall(PywpfolError, ValueError):
    pass


class NotPairwiseCoprime(PywpfolError, ValueError):
    pass


class UnequalPairSums(PywpfolError, ValueError):
    pass


class ExtraWeightNotCompatible(PywpfolError, ValueError):
    pass


class CommonFactor(PywpfolError, ValueError):
    pass


class InfinitelyManySingularities(PywpfolError, ValueError):
    pass


class InvalidSampleConfig(PywpfolError, ValueError):
    pass


class IndexOutOfRange(PywpfolError, IndexError):
    pass


class VariableIndexOutOfRange(PywpfolError, IndexError):
    pass


class ZeroDivisor(PywpfolError, ArithmeticError):
    pass


class ZeroDenominator(PywpfolError, ArithmeticError):
    pass


class ShearExhausted(PywpfolError, RuntimeError):
    pass


class OracleFailure(PywpfolError, RuntimeError):
    pass


class FamilyConstructionError(PywpfolError, RuntimeError):
    pass


class PolySyntaxError(PywpfolError, ValueError):
    def __init__(self, message, line=None, column=None):
        """
        Syntax error in a polynomial or field file.

        Args:
            message (str): What went wrong.
            line (int): 1-based line of the offending text.
            column (int): 1-based column of the offending text.

        """

        self.message = message
        self.line = line
        self.column = column

        if line is not None and column is not None:
            message = "%s (line %i, column %i)" % (message, line, column)

        super().__init__(message)
