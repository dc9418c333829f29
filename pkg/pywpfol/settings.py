"""
Default settings for pywpfol.

User overrides are plain dicts that update a copy of these defaults.

"""

from fractions import Fraction

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"


# Width of the certified alpha_n enclosure
ALPHA_WIDTH = Fraction(1, 10 ** 6)

# Advisory decimal renderings in reports
DECIMAL_PLACES = 6

# Shears (x, y) -> (x + c*y, y) tried by the resultant oracle, in order
SHEAR_CONSTANTS = (1, 2, 3, 5, 7)

# Chart changes u2 = z2 + c1*z0 + c2*z1 tried on P^2, in order
CHART_CHANGES = ((0, 0), (1, 2), (2, 3), (3, 7), (-1, 4), (5, -2))

# Largest foliation degree the P^2 oracle accepts
P2_ORACLE_MAX_DEGREE = 3

# {0, 1/10, ..., 10} U {10^2, 10^6}
DEFAULT_T_GRID = tuple(Fraction(k, 10) for k in range(101)) + (
    Fraction(10 ** 2),
    Fraction(10 ** 6),
)

SAMPLE_DEFAULTS = {
    "seed": 0,
    "samples": 100,
    "n_range": (2, 8),
    "weight_max": 10,
    "t_grid": DEFAULT_T_GRID,
    "m_max": 20,
}
