#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import argparse
import sys
from typing import Union

from vise.cli.main_tools import get_user_settings

from pypenta import __version__
from pypenta.cli.main_functions import (
    audit, b0b_example, beta_example, check_point, lift, make_inner,
    normalize, project, verify_inner)
from pypenta.cli.main_tools import execute, write_result
from pypenta.core.config import (
    ALPHA_GRID, AUDIT_COUNT, AUDIT_SEED, BOUNDARY_TOL, CIRCLE_SAMPLES,
    CONTRACTION_MARGIN, DISC_SAMPLES, MEMBER_TOL)
from pypenta.util.logger import get_logger

logger = get_logger(__name__)

# The following keys can be set by pypenta.yaml
setting_keys = ["tol_boundary",
                "tol_member",
                "alpha_grid",
                "circle_samples",
                "disc_samples",
                "seed",
                "count",
                "margin"]


def simple_override(d: dict, overridden_keys: Union[list, str]) -> None:
    """Override dict if keys exist in pypenta.yaml.

    A two-element alpha_grid list is converted to the "RxA" form.
    """
    user_settings, _ = get_user_settings(yaml_filename="pypenta.yaml",
                                         setting_keys=setting_keys)

    if isinstance(overridden_keys, str):
        overridden_keys = [overridden_keys]
    for key in overridden_keys:
        if key in user_settings:
            v = user_settings[key]
            if key == "alpha_grid" and isinstance(v, (list, tuple)):
                v = "x".join(str(i) for i in v)
            d[key] = v


def parse_args(args):

    parser = argparse.ArgumentParser(
        description="""
    pypenta tests membership of the pentablock and the symmetrized bidisc,
    lifts distinguished boundary points to unitaries, and constructs and
    verifies rational Gamma-inner and pentablock-inner functions.
    All input and output is JSON.""",
        epilog=f"""
    Version: {__version__}""",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    subparsers = parser.add_subparsers()

    # -- parent parser: tolerances
    tol_defaults = {"tol_boundary": BOUNDARY_TOL,
                    "tol_member": MEMBER_TOL,
                    "alpha_grid": "x".join(str(i) for i in ALPHA_GRID)}
    simple_override(tol_defaults, ["tol_boundary", "tol_member", "alpha_grid"])

    tol_parser = argparse.ArgumentParser(
        description="Tolerance parser", add_help=False)
    tol_parser.add_argument(
        "--tol-boundary", dest="tol_boundary", type=float,
        default=tol_defaults["tol_boundary"],
        help="Equality slack on boundary identities such as |p| = 1.")
    tol_parser.add_argument(
        "--tol-member", dest="tol_member", type=float,
        default=tol_defaults["tol_member"],
        help="Inclusion slack of the Gamma and pentablock tests.")
    tol_parser.add_argument(
        "--alpha-grid", dest="alpha_grid", type=str,
        default=tol_defaults["alpha_grid"],
        help="Radial x angular counts of the grid over alpha, e.g. 32x64.")

    del tol_defaults

    # -- parent parser: io
    io_parser = argparse.ArgumentParser(
        description="JSON input and output parser", add_help=False)
    io_parser.add_argument(
        "--in", dest="in_file", type=str,
        help="Input JSON file. Read from stdin when omitted.")
    io_parser.add_argument(
        "--out", dest="out_file", type=str,
        help="Output JSON file. Written to stdout when omitted.")

    # -- check_point ----------------------------------------------------------
    parser_check_point = subparsers.add_parser(
        name="check-point",
        parents=[tol_parser, io_parser],
        description="Report membership of a point (a, s, p) in Gamma, "
                    "b Gamma, the closed pentablock, K0 and K1.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['cp'])

    parser_check_point.set_defaults(func=check_point)

    # -- lift -----------------------------------------------------------------
    parser_lift = subparsers.add_parser(
        name="lift",
        parents=[tol_parser, io_parser],
        description="Lift a K0 point to the unique unitary with equal "
                    "diagonal entries.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['l'])

    parser_lift.set_defaults(func=lift)

    # -- project --------------------------------------------------------------
    parser_project = subparsers.add_parser(
        name="project",
        parents=[tol_parser, io_parser],
        description="Map a unitary with equal diagonal entries to "
                    "(u21, tr U, det U).",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['p'])

    parser_project.set_defaults(func=project)

    # -- make_inner -----------------------------------------------------------
    parser_make_inner = subparsers.add_parser(
        name="make-inner",
        parents=[tol_parser, io_parser],
        description="Validate polynomial data as a Gamma-inner (keys N, D, n) "
                    "or a pentablock-inner (keys blaschke, N1, N2, D, n) "
                    "function.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['mi'])

    parser_make_inner.set_defaults(func=make_inner)

    # -- verify_inner ---------------------------------------------------------
    vi_defaults = {"circle_samples": CIRCLE_SAMPLES,
                   "disc_samples": DISC_SAMPLES}
    simple_override(vi_defaults, ["circle_samples", "disc_samples"])

    parser_verify_inner = subparsers.add_parser(
        name="verify-inner",
        parents=[tol_parser, io_parser],
        description="Verify a pentablock-inner function by sampling.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['vi'])

    parser_verify_inner.add_argument(
        "--circle-samples", dest="circle_samples", type=int,
        default=vi_defaults["circle_samples"],
        help="Number of equally spaced points on the unit circle.")
    parser_verify_inner.add_argument(
        "--disc-samples", dest="disc_samples", type=int,
        default=vi_defaults["disc_samples"],
        help="Number of seeded random points in the disc.")

    del vi_defaults

    parser_verify_inner.set_defaults(func=verify_inner)

    # -- beta_example ---------------------------------------------------------
    parser_beta_example = subparsers.add_parser(
        name="beta-example",
        parents=[io_parser],
        description="Pentablock-inner function ((beta - conj(beta) z) / 2, "
                    "beta + conj(beta) z, z) for a unimodular beta.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['be'])

    parser_beta_example.add_argument(
        "--beta", type=float, nargs=2, default=[1.0, 0.0],
        metavar=("RE", "IM"), help="Unimodular beta.")

    parser_beta_example.set_defaults(func=beta_example)

    # -- b0b_example ----------------------------------------------------------
    parser_b0b_example = subparsers.add_parser(
        name="b0b-example",
        parents=[io_parser],
        description="Pentablock-inner function (B, 0, B) for a Blaschke "
                    "product B given by --zeros and --theta or as JSON.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['bb'])

    parser_b0b_example.add_argument(
        "--zeros", type=float, nargs="*",
        help="Blaschke zeros as a flat list of re im pairs.")
    parser_b0b_example.add_argument(
        "--theta", type=float, default=0.0,
        help="Phase of the Blaschke product.")

    parser_b0b_example.set_defaults(func=b0b_example)

    # -- normalize ------------------------------------------------------------
    parser_normalize = subparsers.add_parser(
        name="normalize",
        parents=[tol_parser, io_parser],
        description="Canonical real scaling of (N1, N2, D).",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['n'])

    parser_normalize.set_defaults(func=normalize)

    # -- audit ----------------------------------------------------------------
    a_defaults = {"seed": AUDIT_SEED,
                  "count": AUDIT_COUNT,
                  "margin": CONTRACTION_MARGIN}
    simple_override(a_defaults, ["seed", "count", "margin"])

    parser_audit = subparsers.add_parser(
        name="audit",
        parents=[tol_parser, io_parser],
        description="Cross-check the predicates against random contractions "
                    "and unitaries.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        aliases=['a'])

    parser_audit.add_argument(
        "--seed", type=int, default=a_defaults["seed"],
        help="Master seed of the PCG64 streams.")
    parser_audit.add_argument(
        "--count", type=int, default=a_defaults["count"],
        help="Number of samples per campaign.")
    parser_audit.add_argument(
        "--margin", type=float, default=a_defaults["margin"],
        help="Sampled contractions have norm below 1 - margin.")

    del a_defaults

    parser_audit.set_defaults(func=audit)

    return parser.parse_args(args)


def main():
    args = parse_args(sys.argv[1:])
    if not hasattr(args, "func"):
        parse_args(["-h"])
    result = execute(args.func, args)
    write_result(result, getattr(args, "out_file", None))
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
