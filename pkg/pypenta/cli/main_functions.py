# -*- coding: utf-8 -*-
import numpy as np

from pypenta.cli.main_tools import (
    CommandResult, Status, read_json_input, to_object, tolerances_from_args)
from pypenta.core.blaschke import BlaschkeProduct
from pypenta.core.domains import (
    Matrix2, Point3, b_gamma_residual, first_k0_violation, gamma_roots,
    in_b_gamma, in_closed_penta, in_gamma, in_K0, in_K1, k0_residuals,
    k1_residual, penta_sup, unitarity_residual)
from pypenta.core.error_classes import InvalidInputError
from pypenta.core.inner import (
    GammaInnerFunction, PentaInnerFunction, make_B0B_example,
    make_beta_example, make_gamma_inner, make_penta_inner, normalize_triple,
    verify_penta_inner)
from pypenta.core.lift import lift_with_report, project_from_unitary
from pypenta.oracle.audit import audit as run_audit
from pypenta.oracle.samplers import SamplerConfig
from pypenta.util.logger import get_logger
from pypenta.util.tools import complex_to_pair

logger = get_logger(__name__)


def _read_entry(in_file, key: str):
    """Input object, or its value at key when piped from lift or project. """
    obj = read_json_input(in_file)
    if isinstance(obj, dict) and key in obj:
        return obj[key]
    return obj


def _validated_penta_inner(obj, tol) -> PentaInnerFunction:
    x = to_object(obj, PentaInnerFunction)
    return make_penta_inner(x.blaschke, x.N1, x.N2, x.D, x.n, tol)


def check_point(args) -> CommandResult:
    tol = tolerances_from_args(args)
    x = to_object(read_json_input(args.in_file), Point3)
    q = x.sp

    in_g = in_gamma(q, tol)
    max_root = float(np.max(np.abs(gamma_roots(q))))
    payload = {
        "gamma": {"value": in_g, "residual": max_root - 1},
        # negative inside the open domain
        "gamma_strict": {"value": in_gamma(q, tol, strict=True),
                         "residual": max_root - (1 - tol.member_tol)},
        "b_gamma": {"value": in_b_gamma(q, tol),
                    "residual": b_gamma_residual(q)},
        "closed_penta": {"value": in_closed_penta(x, tol),
                         "sup_psi": penta_sup(x, tol) if in_g else None},
        "K0": {"value": in_K0(x, tol),
               "residuals": dict(k0_residuals(x)),
               "first_violation": first_k0_violation(x, tol)},
        "K1": {"value": in_K1(x, tol), "residual": k1_residual(x)}}
    return CommandResult(Status.ok, payload)


def lift(args) -> CommandResult:
    tol = tolerances_from_args(args)
    x = to_object(_read_entry(args.in_file, "point"), Point3)
    report = lift_with_report(x, tol)
    payload = {"matrix": report.matrix.as_dict(),
               "unitarity_residual": report.unitarity_residual,
               "k0_residuals": dict(report.k0_residuals)}
    return CommandResult(Status.ok, payload, report.warnings)


def project(args) -> CommandResult:
    tol = tolerances_from_args(args)
    u = to_object(_read_entry(args.in_file, "matrix"), Matrix2)
    x = project_from_unitary(u, tol)
    payload = {"point": x.as_dict(),
               "unitarity_residual": unitarity_residual(u),
               "k0_residuals": dict(k0_residuals(x))}
    return CommandResult(Status.ok, payload)


def make_inner(args) -> CommandResult:
    """Gamma-inner for keys N, D, n and P-inner for keys N1, N2, D, n. """
    tol = tolerances_from_args(args)
    obj = read_json_input(args.in_file)
    if isinstance(obj, GammaInnerFunction) or (isinstance(obj, dict)
                                               and "N" in obj):
        h = to_object(obj, GammaInnerFunction)
        h = make_gamma_inner(h.N, h.D, h.n, tol)
        return CommandResult(Status.ok, h.as_dict())

    x = _validated_penta_inner(obj, tol)
    return CommandResult(Status.ok, x.as_dict())


def verify_inner(args) -> CommandResult:
    tol = tolerances_from_args(args)
    x = to_object(read_json_input(args.in_file), PentaInnerFunction)
    report = verify_penta_inner(x, args.circle_samples, args.disc_samples,
                                tol)
    if report.passed:
        return CommandResult(Status.ok, report.as_dict())
    return CommandResult(Status.check_failed, report.as_dict(),
                         [f"Verification failed.\n{report}"])


def beta_example(args) -> CommandResult:
    x = make_beta_example(complex(*args.beta))
    return CommandResult(Status.ok, x.as_dict())


def b0b_example(args) -> CommandResult:
    if args.in_file or args.zeros is None:
        blaschke = to_object(read_json_input(args.in_file), BlaschkeProduct)
    else:
        if len(args.zeros) % 2:
            raise InvalidInputError("--zeros takes re im pairs.")
        zeros = [complex(re, im) for re, im in
                 zip(args.zeros[::2], args.zeros[1::2])]
        blaschke = BlaschkeProduct(zeros, args.theta)
    return CommandResult(Status.ok, make_B0B_example(blaschke).as_dict())


def normalize(args) -> CommandResult:
    tol = tolerances_from_args(args)
    x = _validated_penta_inner(read_json_input(args.in_file), tol)
    normalized, witness = normalize_triple(x)
    payload = {"inner": normalized.as_dict(),
               "t": complex_to_pair(witness.t)}
    return CommandResult(Status.ok, payload)


def audit(args) -> CommandResult:
    tol = tolerances_from_args(args)
    try:
        cfg = SamplerConfig(args.seed, args.count, args.margin)
    except ValueError as e:
        return CommandResult(Status.invalid_input, diagnostics=[str(e)])
    report = run_audit(cfg, tol)
    if report.all_passed:
        return CommandResult(Status.ok, report.as_dict())
    failed = [repr(c) for c in report.campaigns if not c.all_passed]
    return CommandResult(Status.check_failed, report.as_dict(), failed)
