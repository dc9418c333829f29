"""
Command line interface.

Each subcommand prints one JSON report on standard output; diagnostics go to
standard error. Exit codes: 0 success, 1 a violated bound, failed suite,
non-invariant hypersurface or oracle disagreement, 2 bad input.

"""

import argparse
import logging
import os
import sys

from monty.serialization import loadfn

from pywpfol.bounds import (
    BoundStatus,
    alpha_enclosure,
    check_bound,
    milnor_sum_on_V,
    milnor_sum_total,
    poincare_bound,
    r_n,
)
from pywpfol.errors import InvalidSampleConfig, PywpfolError
from pywpfol.family import FamilySpec, generate_family, verify_family
from pywpfol.foliation import is_invariant
from pywpfol.io import (
    Report,
    print_field_file,
    print_hypersurface_file,
    print_poly,
    read_field_file,
    read_hypersurface_file,
)
from pywpfol.oracles import check_singF_p2
from pywpfol.polynomial import WeightSystem, sections_dimension
from pywpfol.settings import ALPHA_WIDTH, DECIMAL_PLACES
from pywpfol.utils import as_fraction, get_logger, rational_to_dict, truncate_decimal
from pywpfol.verification import SUITES, SampleConfig, run_suites

__author__ = "pywpfol developers"
__copyright__ = "MIT License"
__version__ = "0.1.0"
__status__ = "Development"
__date__ = "October 2026"

logger = get_logger(__name__)

FIELD_FILENAME = "family_field.txt"
HYPERSURFACE_FILENAME = "family_hypersurface.txt"


def _rational(text):
    return as_fraction(text)


def _alpha(args):
    width = args.width
    interval = alpha_enclosure(args.n, width)
    m = args.n if args.n % 2 else args.n - 1

    result = {
        "interval": interval.as_dict(),
        "m": m,
        "r_lo": rational_to_dict(r_n(m, interval.lo)),
        "r_hi": rational_to_dict(r_n(m, interval.hi)),
        "decimal": truncate_decimal(interval.lo, args.places),
        "decimal_interval": list(interval.decimal(args.places)),
    }
    logger.info("alpha_%i in %s" % (args.n, interval))
    return Report("alpha", {"n": args.n, "width": rational_to_dict(width), "places": args.places},
                  result, "ok"), 0


def _bound(args):
    w = WeightSystem(args.weights)
    report = poincare_bound(w, args.deg, args.width)
    logger.info("Bound on %r, degree %i: %s" % (w, args.deg, report.bound_value))
    return Report("bound", {"weights": list(w), "deg": args.deg}, report.as_dict(), "ok"), 0


def _check_bound(args):
    w = WeightSystem(args.weights)
    check = check_bound(w, args.deg, args.deg_v)
    logger.info("deg V = %i against degree %i on %r: %s" % (args.deg_v, args.deg, w, check.status.value))
    code = 1 if check.status == BoundStatus.VIOLATED else 0
    inputs = {"weights": list(w), "deg": args.deg, "deg_v": args.deg_v}
    return Report("check-bound", inputs, check.as_dict(), check.status.value), code


def _invariant(args):
    _, field = read_field_file(args.field)
    _, f = read_hypersurface_file(args.hypersurface)
    result = is_invariant(field, f)

    payload = {
        "invariant": result.invariant,
        "foliation_degree": field.degree,
        "cofactor": print_poly(result.cofactor) if result.invariant else None,
        "remainder": print_poly(result.remainder),
    }
    status = "Invariant" if result.invariant else "NotInvariant"
    logger.info("%s: %s" % (args.hypersurface, status))
    inputs = {"field": args.field, "hypersurface": args.hypersurface}
    return Report("invariant", inputs, payload, status), 0 if result.invariant else 1


def _milnor_sum(args):
    w = WeightSystem(args.weights)
    payload = {"total": rational_to_dict(milnor_sum_total(w, args.deg), DECIMAL_PLACES)}
    if args.deg_v is not None:
        payload["on_v"] = rational_to_dict(milnor_sum_on_V(w, args.deg, args.deg_v), DECIMAL_PLACES)
    inputs = {"weights": list(w), "deg": args.deg, "deg_v": args.deg_v}
    return Report("milnor-sum", inputs, payload, "ok"), 0


def _sections_dim(args):
    w = WeightSystem(args.weights)
    inputs = {"weights": list(w), "deg": args.deg}
    return Report("sections-dim", inputs, {"dimension": sections_dimension(w, args.deg)}, "ok"), 0


def _gen_example(args):
    if len(args.pairs) % 2:
        raise ValueError("--pairs needs an even number of integers, got %i." % len(args.pairs))

    pairs = list(zip(args.pairs[::2], args.pairs[1::2]))
    spec = FamilySpec(pairs, extra_weight=args.extra, multiplier=args.multiplier)
    inst = generate_family(spec)
    check = verify_family(inst)

    os.makedirs(args.out_dir, exist_ok=True)
    field_path = os.path.join(args.out_dir, FIELD_FILENAME)
    hypersurface_path = os.path.join(args.out_dir, HYPERSURFACE_FILENAME)
    with open(field_path, "w") as f:
        f.write(print_field_file(inst.field))
    with open(hypersurface_path, "w") as f:
        f.write(print_hypersurface_file(inst.hypersurface))

    payload = {
        "weights": list(inst.weights),
        "zeta": inst.zeta,
        "xi": inst.xi,
        "exponents": list(inst.exponents),
        "degF": inst.foliation_degree,
        "degV": inst.zeta,
        "bound": check.bound.status.value,
        "verification": check.as_dict(),
        "passed": check.passed,
        "files": {"field": field_path, "hypersurface": hypersurface_path},
    }
    logger.info("Family %s: zeta %i, deg F %i, bound %s."
                % (pairs, inst.zeta, inst.foliation_degree, check.bound.status.value))
    inputs = {"pairs": [list(p) for p in pairs], "extra": args.extra, "multiplier": args.multiplier}
    return Report("gen-example", inputs, payload, check.bound.status.value), 0 if check.passed else 1


def _verify(args):
    settings = loadfn(args.config) if args.config else {}
    if settings is None:
        settings = {}
    if not isinstance(settings, dict):
        raise InvalidSampleConfig(
            "%s must hold a mapping of settings, got %s." % (args.config, type(settings).__name__)
        )
    settings = dict(settings)
    overrides = {
        "seed": args.seed,
        "samples": args.samples,
        "weight_max": args.weight_max,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})

    if args.n_min is not None or args.n_max is not None:
        n_lo, n_hi = settings.get("n_range", SampleConfig.from_settings().n_range)
        settings["n_range"] = (
            args.n_min if args.n_min is not None else n_lo,
            args.n_max if args.n_max is not None else n_hi,
        )

    cfg = SampleConfig.from_settings(settings)
    reports = run_suites([args.suite], cfg)
    passed = all(r.passed for r in reports)

    for r in reports:
        logger.info("%s: %i cases, %i failures" % (r.name, r.cases, len(r.failures)))

    payload = {"config": cfg.as_dict(), "suites": [r.as_dict() for r in reports], "passed": passed}
    inputs = {"suite": args.suite, "config": args.config}
    return Report("verify", inputs, payload, "pass" if passed else "fail"), 0 if passed else 1


def _check_sing_p2(args):
    _, field = read_field_file(args.field)
    check = check_singF_p2(field)
    status = "agree" if check.agrees else "disagree"
    logger.info("P^2 degree %i: formula %s, oracle %s." % (check.degree, check.formula_total, check.oracle.total))
    return Report("check-sing-p2", {"field": args.field}, check.as_dict(), status), 0 if check.agrees else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pywpfol",
        description="Degree bounds for invariant hypersurfaces of foliations on weighted projective spaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on standard error.")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("alpha", help="Certified enclosure of alpha_n.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--width", type=_rational, default=ALPHA_WIDTH)
    p.add_argument(
        "--places",
        type=int,
        default=DECIMAL_PLACES,
        help="Digits of the decimal renderings. \"decimal\" truncates the certified lower "
        "endpoint, \"decimal_interval\" rounds both endpoints outward.",
    )
    p.set_defaults(func=_alpha)

    p = sub.add_parser("bound", help="Degree bound for invariant hypersurfaces.")
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--width", type=_rational, default=ALPHA_WIDTH)
    p.set_defaults(func=_bound)

    p = sub.add_parser("check-bound", help="Check a hypersurface degree against the bound.")
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--deg-v", type=int, required=True)
    p.set_defaults(func=_check_bound)

    p = sub.add_parser("invariant", help="Test invariance of a hypersurface.")
    p.add_argument("--field", required=True)
    p.add_argument("--hypersurface", required=True)
    p.set_defaults(func=_invariant)

    p = sub.add_parser("milnor-sum", help="Milnor sums over Sing(F) and on V.")
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--deg-v", type=int, default=None)
    p.set_defaults(func=_milnor_sum)

    p = sub.add_parser("sections-dim", help="Dimension of H^0(P(w), O(d)).")
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--deg", type=int, required=True)
    p.set_defaults(func=_sections_dim)

    p = sub.add_parser("gen-example", help="Build and verify a family member.")
    p.add_argument("--pairs", type=int, nargs="+", required=True)
    p.add_argument("--extra", type=int, default=None)
    p.add_argument("--multiplier", type=int, default=1)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=_gen_example)

    p = sub.add_parser("verify", help="Run property suites.")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--weight-max", type=int, default=None)
    p.add_argument("--config", default=None, help="JSON or YAML file of sampling settings.")
    p.set_defaults(func=_verify)

    p = sub.add_parser("check-sing-p2", help="Resultant check of the Milnor sum on P^2.")
    p.add_argument("--field", required=True)
    p.set_defaults(func=_check_sing_p2)

    return parser


def run_command(argv):
    """
    Run one subcommand and print its report.

    Args:
        argv (list): Arguments without the program name.

    Returns:
        int: Exit code.

    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    logger.setLevel(logging.DEBUG if args.verbose else logging.INFO)

    try:
        report, code = args.func(args)
    except (PywpfolError, ValueError, TypeError, ArithmeticError, IndexError, OSError) as exc:
        sys.stderr.write("pywpfol %s: error: %s\n" % (args.command, exc))
        return 2

    sys.stdout.write(report.to_json() + "\n")
    return code


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
