# -*- coding: utf-8 -*-
from collections import OrderedDict
from typing import List, Optional

from monty.json import MSONable

from pypenta.core.config import CONDITIONING_THRESHOLD
from pypenta.core.domains import (
    Matrix2, Point3, Tolerances, first_k0_violation, k0_residuals, pi_map,
    unitarity_residual)
from pypenta.core.error_classes import (
    LiftError, NotInK0Error, NotUnitaryError, UnequalDiagonalError)
from pypenta.util.logger import get_logger

__author__ = "pypenta developers"

logger = get_logger(__name__)

# The unitarity check is relaxed by this factor near the a = 0 branch.
NEAR_BRANCH_FACTOR = 10


class LiftReport(MSONable):
    """Unitary lift of a K0 point together with its residuals. """

    def __init__(self,
                 matrix: Matrix2,
                 unitarity_residual: float,
                 k0_residuals: dict,
                 warnings: Optional[List[str]] = None):
        self.matrix = matrix
        self.unitarity_residual = float(unitarity_residual)
        self.k0_residuals = OrderedDict(k0_residuals)
        self.warnings = list(warnings or [])

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "matrix": self.matrix.as_dict(),
                "unitarity_residual": self.unitarity_residual,
                "k0_residuals": dict(self.k0_residuals),
                "warnings": self.warnings}

    @classmethod
    def from_dict(cls, d: dict):
        matrix = d["matrix"]
        if not isinstance(matrix, Matrix2):
            matrix = Matrix2.from_dict(matrix)
        return cls(matrix,
                   d["unitarity_residual"],
                   d["k0_residuals"],
                   d.get("warnings"))


def proof_identity_residual(U: Matrix2) -> float:
    """|4 |u21|^2 + |tr U|^2 - 4|, zero for unitaries with equal diagonal. """
    return abs(4 * abs(U.u21) ** 2 + abs(U.u11 + U.u22) ** 2 - 4)


def lift_with_report(x: Point3, tol: Optional[Tolerances] = None
                     ) -> LiftReport:
    """Construct the unique unitary U with u11 = u22 and pi(U) = x.

    For |a| > boundary_tol, U = [[s/2, (s^2 - 4p) / 4a], [a, s/2]], otherwise
    U = diag(s/2, s/2), which requires s^2 = 4p.

    Args:
        x (Point3):
            Point of K0.
        tol (Tolerances):
            Tolerances. boundary_tol sets both the K0 check and the branch.

    Returns:
        LiftReport holding the matrix and the residuals.

    Raises:
        NotInK0Error: when x is not in K0. The first violated condition is
            reported.
        LiftError: when a = 0 but s^2 != 4p.
        NotUnitaryError: when rounding destroyed unitarity.
    """
    tol = tol or Tolerances()
    violation = first_k0_violation(x, tol)
    if violation:
        raise NotInK0Error(violation, f"{x} is not in K0: {violation} fails.")

    warnings = []
    allowed = tol.boundary_tol
    if abs(x.a) <= tol.boundary_tol:
        gap = abs(x.s ** 2 - 4 * x.p)
        if gap > tol.boundary_tol:
            raise LiftError(f"|s^2 - 4p| = {gap} must vanish when a = 0.")
        u = Matrix2(x.s / 2, 0, 0, x.s / 2)
    else:
        u = Matrix2(x.s / 2, (x.s ** 2 - 4 * x.p) / (4 * x.a), x.a, x.s / 2)
        if abs(x.a) < CONDITIONING_THRESHOLD:
            allowed *= NEAR_BRANCH_FACTOR
            message = (f"|a| = {abs(x.a)} is close to the a = 0 branch; "
                       f"u12 may be ill-conditioned.")
            logger.warning(message)
            warnings.append(message)

    residual = unitarity_residual(u)
    if residual > allowed:
        raise NotUnitaryError(f"Lifted matrix has unitarity residual "
                              f"{residual} > {allowed}.")

    return LiftReport(u, residual, k0_residuals(x), warnings)


def lift_to_unitary(x: Point3, tol: Optional[Tolerances] = None) -> Matrix2:
    return lift_with_report(x, tol).matrix


def project_from_unitary(U: Matrix2, tol: Optional[Tolerances] = None
                         ) -> Point3:
    """pi(U) for a unitary with equal diagonal entries, a point of K0.

    Raises:
        NotUnitaryError: when U is not unitary within boundary_tol.
        UnequalDiagonalError: when |u11 - u22| > boundary_tol.
    """
    tol = tol or Tolerances()
    residual = unitarity_residual(U)
    if residual > tol.boundary_tol:
        raise NotUnitaryError(f"{U} has unitarity residual {residual}.")
    if abs(U.u11 - U.u22) > tol.boundary_tol:
        raise UnequalDiagonalError(
            f"Diagonal entries {U.u11} and {U.u22} differ.")
    return pi_map(U)
