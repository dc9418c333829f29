"""
Small helpers shared across pywpfol: logging and exact rational rendering.

"""

import logging
import sys

from fractions import Fraction

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"


def get_logger(
    name,
    level=logging.INFO,
    log_format="%(asctime)s %(levelname)s %(name)s %(message)s",
    stream=sys.stderr,
):
    """
    Logger with a single stream handler.

    Standard output is reserved for JSON reports, so the default stream is
    standard error.

    Args:
        name (str): Logger name, usually __name__.
        level (int): Logging level.
        log_format (str): logging.Formatter format string.
        stream (file): Stream for the handler.

    Returns:
        logging.Logger

    """

    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Modules may be imported many times (tests), keep a single handler
    if not any(getattr(h, "_pywpfol", False) for h in logger.handlers):
        formatter = logging.Formatter(log_format)
        sh = logging.StreamHandler(stream=stream)
        sh.setFormatter(formatter)
        sh._pywpfol = True
        logger.addHandler(sh)

    return logger


def as_fraction(value):
    """
    Convert ints, Fractions and rational strings ("3/4", "1e-6") to Fraction.

    Floats are rejected: every quantity in pywpfol is exact.

    """

    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("Floats are not accepted; pass an int, Fraction or string.")
    if isinstance(value, str):
        return Fraction(value.strip())

    # ints, numpy integers
    return Fraction(int(value))


def truncate_decimal(value, places=6):
    """
    Decimal string of a rational, truncated (not rounded) to a number of places.

    Args:
        value (Fraction): Exact value.
        places (int): Digits after the decimal point.

    Returns:
        str: e.g. truncate_decimal(Fraction(2, 3), 4) == "0.6666".

    """

    value = as_fraction(value)
    sign = "-" if value < 0 else ""
    value = abs(value)

    scaled = value.numerator * 10 ** places // value.denominator
    integer_part, fractional_part = divmod(scaled, 10 ** places)

    if places == 0:
        return "%s%i" % (sign, integer_part)

    return "%s%i.%s" % (sign, integer_part, str(fractional_part).zfill(places))


def rational_to_dict(value, places=None):
    """
    JSON-safe rendering of a rational: {"num": str, "den": str}.

    Args:
        value (Fraction or int): Exact value.
        places (int): If given, add an advisory truncated "decimal" field.

    """

    value = as_fraction(value)
    d = {"num": str(value.numerator), "den": str(value.denominator)}

    if places is not None:
        d["decimal"] = truncate_decimal(value, places)

    return d


def rational_from_dict(d):
    """Inverse of rational_to_dict."""

    return Fraction(int(d["num"]), int(d["den"]))
