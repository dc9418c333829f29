"""
Seeded property suites for the inequalities behind the degree bound.

Every case draws its inputs from numpy.random.default_rng([seed, index]), so a
case depends only on the seed and its own index and any failure can be re-run
on its own through the matching check_*_case function. All comparisons are
exact.

"""

from fractions import Fraction

import numpy as np

from monty.json import MSONable

from pywpfol.bounds import (
    sigmas,
    sigma,
    psi,
    omega_poly,
    omega_via_p,
    q_poly,
    lemma_q_polynomial,
    root_enclosure,
    crossing_polynomial,
    crossing_value_at_one,
    milnor_sum_on_V,
)
from pywpfol.errors import InvalidSampleConfig
from pywpfol.polynomial import WeightSystem
from pywpfol.settings import SAMPLE_DEFAULTS, ALPHA_WIDTH
from pywpfol.utils import get_logger, as_fraction, rational_to_dict, rational_from_dict

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"

logger = get_logger(__name__)

PROP_OMEGA_OFFSETS = (1, 2, 10)


class SampleConfig(MSONable):
    def __init__(self, seed=0, samples=100, n_range=(2, 8), weight_max=10, t_grid=None, m_max=20):
        """
        Sampling parameters shared by all suites.

        Args:
            seed (int): Non-negative 64-bit seed.
            samples (int): Random cases per suite.
            n_range (tuple): Inclusive range of dimensions n, within [2, 12].
            weight_max (int): Weights are drawn from [1, weight_max].
            t_grid (list): Non-negative rationals for "for all t >= 0" checks.
            m_max (int): Largest m checked by the Q_m suite.

        """

        n_range = tuple(int(n) for n in n_range)
        t_grid = SAMPLE_DEFAULTS["t_grid"] if t_grid is None else t_grid
        t_grid = tuple(as_fraction(t) for t in t_grid)

        if not 0 <= int(seed) < 2 ** 64:
            raise InvalidSampleConfig("The seed must be a non-negative 64-bit integer.")
        if int(samples) < 1:
            raise InvalidSampleConfig("At least one sample is needed.")
        if len(n_range) != 2 or not 2 <= n_range[0] <= n_range[1] <= 12:
            raise InvalidSampleConfig("n_range must satisfy 2 <= lo <= hi <= 12, got %s." % (n_range,))
        if int(weight_max) < 1:
            raise InvalidSampleConfig("weight_max must be at least 1.")
        if any(t < 0 for t in t_grid):
            raise InvalidSampleConfig("Grid points must be non-negative.")
        if int(m_max) < 2:
            raise InvalidSampleConfig("m_max must be at least 2.")

        self.seed = int(seed)
        self.samples = int(samples)
        self.n_range = n_range
        self.weight_max = int(weight_max)
        self.t_grid = t_grid
        self.m_max = int(m_max)

    @classmethod
    def from_settings(cls, settings=None):
        """
        Build from SAMPLE_DEFAULTS updated by a dict of overrides.

        Args:
            settings (dict): Overrides, e.g. loaded from a JSON/YAML file.

        """

        config = dict(SAMPLE_DEFAULTS)
        if settings:
            unknown = set(settings) - set(config)
            if unknown:
                raise InvalidSampleConfig("Unknown settings: %s." % ", ".join(sorted(unknown)))
            config.update(settings)
        return cls(**config)

    def rng(self, index):
        return np.random.default_rng([self.seed, index])

    def draw_weights(self, rng, n):
        return tuple(int(w) for w in rng.integers(1, self.weight_max + 1, size=n + 1))

    def as_dict(self):
        return {
            "@module": self.__class__.__module__,
            "@class": self.__class__.__name__,
            "@version": __version__,
            "seed": self.seed,
            "samples": self.samples,
            "n_range": list(self.n_range),
            "weight_max": self.weight_max,
            "t_grid": [rational_to_dict(t) for t in self.t_grid],
            "m_max": self.m_max,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["seed"],
            d["samples"],
            d["n_range"],
            d["weight_max"],
            [rational_from_dict(t) for t in d["t_grid"]],
            d["m_max"],
        )


class SuiteReport(MSONable):
    def __init__(self, name, cases, failures, seed):
        """
        Result of one suite.

        Args:
            name (str): Suite name.
            cases (int): Cases run.
            failures (list): One dict per violated check, with the case index,
                seed, inputs and both sides of the comparison.
            seed (int): Seed of the run.

        """

        self.name = name
        self.cases = cases
        self.failures = sorted(failures, key=lambda f: f["index"])
        self.seed = seed

    @property
    def passed(self):
        return not self.failures

    def __repr__(self):
        return "SuiteReport(%s: %i cases, %i failures)" % (self.name, self.cases, len(self.failures))


def _render(value):
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return rational_to_dict(value)
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return value


def _failure(check, inputs, lhs, rhs):
    return {
        "check": check,
        "inputs": {k: _render(v) for k, v in inputs.items()},
        "lhs": _render(lhs),
        "rhs": _render(rhs),
    }


def _collect(name, cfg, cases):
    """Run (index, callable) pairs and tag failures with index and seed."""

    failures = []
    count = 0
    for index, run in cases:
        count += 1
        for failure in run():
            failure["index"] = index
            failure["seed"] = cfg.seed
            failures.append(failure)

    report = SuiteReport(name, count, failures, cfg.seed)
    logger.info("Suite %s: %i cases, %i failures." % (name, count, len(failures)))
    return report


def check_lemma_q_case(m, t):
    """Q_m(t) > 0, Q_m(t) >= 4(m+1)/((m+2)^2 (t+1)^2) and (t+1)^2 Q_m(t) = F(t)."""

    t = as_fraction(t)
    inputs = {"m": m, "t": t}
    value = q_poly(m)(t)
    bound = Fraction(4 * (m + 1), (m + 2) ** 2) / (t + 1) ** 2
    closed = lemma_q_polynomial(m)(t)

    failures = []
    if not value > 0:
        failures.append(_failure("Q_m(t) > 0", inputs, value, 0))
    if not value >= bound:
        failures.append(_failure("Q_m(t) >= 4(m+1)/((m+2)^2(t+1)^2)", inputs, value, bound))
    if (t + 1) ** 2 * value != closed:
        failures.append(_failure("(t+1)^2 Q_m(t) = F(t)", inputs, (t + 1) ** 2 * value, closed))
    return failures


def suite_lemma_q(cfg):
    """Positivity of Q_m on the grid for even 2 <= m <= m_max."""

    cases = []
    index = 0
    for m in range(2, cfg.m_max + 1, 2):
        for t in cfg.t_grid:
            cases.append((index, lambda m=m, t=t: check_lemma_q_case(m, t)))
            index += 1
    return _collect("lemma-q", cfg, cases)


def check_lemma_sym_case(weights):
    """(k+1) sigma_{k+1} < sigma_1 sigma_k and the splitting identity, 1 <= k <= n."""

    weights = tuple(weights)
    s = sigmas(weights)
    n = len(weights) - 1
    inputs = {"weights": weights}

    failures = []
    for k in range(1, n + 1):
        lhs = (k + 1) * s[k + 1]
        rhs = s[1] * s[k]
        if not lhs < rhs:
            failures.append(_failure("(k+1) sigma_{k+1} < sigma_1 sigma_k, k=%i" % k, inputs, lhs, rhs))

        split = sum(
            w ** 2 * sigma(weights[:i] + weights[i + 1:], k - 1) for i, w in enumerate(weights)
        )
        if rhs != split + lhs:
            failures.append(
                _failure("sigma_1 sigma_k = sum w_i^2 sigma_{k-1}(w^i) + (k+1) sigma_{k+1}, k=%i" % k,
                         inputs, rhs, split + lhs)
            )
    return failures


def suite_lemma_sym(cfg):
    """Symmetric-function inequality on random weight tuples."""

    def draw(index):
        rng = cfg.rng(index)
        n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
        return cfg.draw_weights(rng, n)

    cases = [
        (i, lambda i=i: check_lemma_sym_case(draw(i))) for i in range(cfg.samples)
    ]
    return _collect("lemma-sym", cfg, cases)


def check_prop_omega_case(weights, d, t_grid):
    """(-1)^{n-1} Omega_n(t) > 0 on the grid, Omega_n(t) > sigma_{n-1} for odd n, and the P_m form."""

    w = WeightSystem(weights)
    n = w.n
    omega = omega_poly(w, d)
    s_top = sigma(w, n - 1)
    sign = (-1) ** (n - 1)

    failures = []
    for t in t_grid:
        inputs = {"weights": w.weights, "d": d, "t": t}
        value = omega(t)
        if not sign * value > 0:
            failures.append(_failure("(-1)^(n-1) Omega_n(t) > 0", inputs, sign * value, 0))
        if n % 2 == 1 and not value > s_top:
            failures.append(_failure("Omega_n(t) > sigma_{n-1}", inputs, value, s_top))
        via_p = omega_via_p(w, d, t)
        if value != via_p:
            failures.append(_failure("Omega_n(t) = sum sigma_l (d-1)^. P_.(s)", inputs, value, via_p))
    return failures


def suite_prop_omega(cfg):
    """Sign of Omega_n when d >= sigma_1 + 1."""

    def draw(index):
        rng = cfg.rng(index)
        n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
        weights = cfg.draw_weights(rng, n)
        offset = PROP_OMEGA_OFFSETS[int(rng.integers(len(PROP_OMEGA_OFFSETS)))]
        return weights, sum(weights) + offset

    cases = []
    for i in range(cfg.samples):
        cases.append((i, lambda i=i: check_prop_omega_case(*draw(i), t_grid=cfg.t_grid)))
    return _collect("prop-omega", cfg, cases)


def check_proof_items_case(n, sigma1, s, enclosure):
    """
    The odd n degree inequalities at t = s + hi * sigma, and F(1) bracketing 0 at the endpoints.

    Args:
        n (int): Odd dimension, n >= 3.
        sigma1 (int): sigma_1 of the weights, >= n + 1.
        s (int): d - 1 >= sigma1.
        enclosure (RationalInterval): Enclosure of the root of R_n.

    """

    inputs = {"n": n, "sigma": sigma1, "s": s, "hi": enclosure.hi}
    t = s + enclosure.hi * sigma1

    failures = []

    lhs = t ** n * (t - sigma1)
    rhs = Fraction(s) ** n * (s + sigma1)
    if not lhs >= rhs:
        failures.append(_failure("t^n (t - sigma) >= s^n (s + sigma)", inputs, lhs, rhs))

    scaled = Fraction(sigma1) ** (n + 1) * crossing_polynomial(n, enclosure.hi)(Fraction(s, sigma1))
    if lhs - rhs != scaled:
        failures.append(_failure("t^n (t - sigma) - s^n (s + sigma) = sigma^(n+1) F(s/sigma)",
                                 inputs, lhs - rhs, scaled))

    for k in range(1, (n - 3) // 2 + 1):
        shift = Fraction(sigma1, 2 * k)
        lhs_k = t ** (n - 2 * k) * (t - shift)
        rhs_k = Fraction(s) ** (n - 2 * k) * (s + shift)
        if not lhs_k >= rhs_k:
            failures.append(_failure("(t/s)^(n-2k) >= (s + sigma/2k)/(t - sigma/2k), k=%i" % k,
                                     inputs, lhs_k, rhs_k))

    at_lo = crossing_value_at_one(n, enclosure.lo)
    at_hi = crossing_value_at_one(n, enclosure.hi)
    if not at_lo < 0 < at_hi:
        failures.append(_failure("F(1) at lo < 0 < F(1) at hi", inputs, at_lo, at_hi))

    return failures


def suite_proof_items(cfg):
    """The odd n degree inequalities with alpha_n replaced by its upper endpoint."""

    odd = [n for n in range(cfg.n_range[0], cfg.n_range[1] + 1) if n % 2 == 1 and n >= 3]
    if not odd:
        return _collect("proof-items", cfg, [])

    enclosures = {}

    def run(index):
        rng = cfg.rng(index)
        n = odd[int(rng.integers(len(odd)))]
        weights = cfg.draw_weights(rng, n)
        sigma1 = sum(weights)
        s = sigma1 + int(rng.integers(0, 10 * sigma1 + 1))
        if n not in enclosures:
            enclosures[n] = root_enclosure(n, ALPHA_WIDTH)
        return check_proof_items_case(n, sigma1, s, enclosures[n])

    return _collect("proof-items", cfg, [(i, lambda i=i: run(i)) for i in range(cfg.samples)])


def check_n2_boundary_case(weights, d):
    """Psi = -t^2 + (sigma_1+d-1) t, Psi(sigma_1+d-1) = 0 and no Milnor mass on V there."""

    w = WeightSystem(weights)
    s1 = sigma(w, 1)
    boundary = s1 + d - 1
    inputs = {"weights": w.weights, "d": d}
    poly = psi(w, d)

    failures = []
    expected = (Fraction(0), Fraction(boundary), Fraction(-1))
    if poly.coefficients != expected:
        failures.append(_failure("Psi = -t^2 + (sigma_1+d-1) t", inputs,
                                 list(poly.coefficients), list(expected)))
    if poly(boundary) != 0:
        failures.append(_failure("Psi(sigma_1+d-1) = 0", inputs, poly(boundary), 0))

    on_v = milnor_sum_on_V(w, d, boundary)
    if on_v != 0:
        failures.append(_failure("milnor_sum_on_V at sigma_1+d-1 = 0", inputs, on_v, 0))
    return failures


def suite_n2_boundary(cfg):
    """The excluded n = 2 boundary degree d0 = sigma_1 + d - 1."""

    def draw(index):
        rng = cfg.rng(index)
        weights = cfg.draw_weights(rng, 2)
        return weights, int(rng.integers(1, 21))

    cases = [(i, lambda i=i: check_n2_boundary_case(*draw(i))) for i in range(cfg.samples)]
    return _collect("n2-boundary", cfg, cases)


SUITES = {
    "lemma-q": suite_lemma_q,
    "lemma-sym": suite_lemma_sym,
    "prop-omega": suite_prop_omega,
    "proof-items": suite_proof_items,
    "n2-boundary": suite_n2_boundary,
}


def run_suites(names, cfg):
    """
    Run suites by name ("all" expands to every suite), sequentially.

    Returns:
        list: SuiteReport per suite, in the order given.

    """

    if isinstance(names, str):
        names = [names]

    expanded = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise ValueError("Unknown suite %r; choose from %s or all." % (name, ", ".join(SUITES)))

    return [SUITES[name](cfg) for name in expanded]
