# -*- coding: utf-8 -*-
from collections import OrderedDict
from typing import Optional, Tuple

import numpy as np
from monty.json import MSONable
from scipy.linalg import svdvals

from pypenta.core.config import (
    ALPHA_GRID, ALPHA_RADIUS_MAX, BOUNDARY_TOL, COEFF_TOL, MATCH_TOL,
    MEMBER_TOL, PSI_DENOMINATOR_GUARD, REFINE_PASSES, TWO_PI)
from pypenta.core.error_classes import PsiDomainError
from pypenta.core.polynomial import Polynomial
from pypenta.util.logger import get_logger
from pypenta.util.tools import (
    array_to_pairs, complex_to_pair, pair_to_complex, pairs_to_array)

__author__ = "pypenta developers"

logger = get_logger(__name__)


class Matrix2(MSONable):
    """2x2 complex matrix [[u11, u12], [u21, u22]]. """

    def __init__(self, u11: complex, u12: complex, u21: complex,
                 u22: complex):
        self.u11, self.u12 = complex(u11), complex(u12)
        self.u21, self.u22 = complex(u21), complex(u22)

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_array(cls, array) -> "Matrix2":
        (u11, u12), (u21, u22) = np.asarray(array, dtype=complex)
        return cls(u11, u12, u21, u22)

    def as_array(self) -> np.ndarray:
        return np.array([[self.u11, self.u12], [self.u21, self.u22]])

    @property
    def entries(self) -> Tuple[complex, complex, complex, complex]:
        return self.u11, self.u12, self.u21, self.u22

    def __repr__(self):
        return f"Matrix2({self.as_array().tolist()})"

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "entries": array_to_pairs(self.entries)}

    @classmethod
    def from_dict(cls, d):
        """Accepts the row-major array of 4 pairs or a dict holding it. """
        if isinstance(d, dict):
            d = d["entries"]
        entries = pairs_to_array(d)
        if len(entries) != 4:
            raise ValueError(f"{d} does not have 4 entries.")
        return cls(*entries)


class Point3(MSONable):
    """Triple (a, s, p), a candidate point of the closed pentablock. """

    def __init__(self, a: complex, s: complex, p: complex):
        self.a, self.s, self.p = complex(a), complex(s), complex(p)
        if not np.all(np.isfinite([self.a, self.s, self.p])):
            raise ValueError(f"{self} has non-finite components.")

    @property
    def sp(self) -> "Point2":
        return Point2(self.s, self.p)

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.s, self.p])

    def __repr__(self):
        return f"Point3(a={self.a}, s={self.s}, p={self.p})"

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "a": complex_to_pair(self.a),
                "s": complex_to_pair(self.s),
                "p": complex_to_pair(self.p)}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(pair_to_complex(d["a"]), pair_to_complex(d["s"]),
                   pair_to_complex(d["p"]))


class Point2(MSONable):
    """Pair (s, p), a candidate point of the symmetrized bidisc. """

    def __init__(self, s: complex, p: complex):
        self.s, self.p = complex(s), complex(p)
        if not np.all(np.isfinite([self.s, self.p])):
            raise ValueError(f"{self} has non-finite components.")

    def __repr__(self):
        return f"Point2(s={self.s}, p={self.p})"

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "s": complex_to_pair(self.s),
                "p": complex_to_pair(self.p)}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(pair_to_complex(d["s"]), pair_to_complex(d["p"]))


class Tolerances(MSONable):
    """Numerical slack used by the membership tests and the validations. """

    def __init__(self,
                 boundary_tol: float = BOUNDARY_TOL,
                 member_tol: float = MEMBER_TOL,
                 alpha_grid: Tuple[int, int] = ALPHA_GRID,
                 match_tol: float = MATCH_TOL,
                 coeff_tol: float = COEFF_TOL):
        """
        Args:
            boundary_tol (float):
                Equality slack of boundary identities such as |p| = 1.
            member_tol (float):
                Inclusion slack of the sweep over Psi_alpha and of Gamma.
            alpha_grid (tuple):
                (radial count, angular count) of the polar grid over alpha.
            match_tol (float):
                Absolute distance under which two roots are regarded equal.
            coeff_tol (float):
                Relative tolerance of polynomial coefficient identities.
        """
        values = [boundary_tol, member_tol, match_tol, coeff_tol]
        if any(v <= 0 for v in values):
            raise ValueError(f"Tolerances {values} must be positive.")
        alpha_grid = tuple(int(i) for i in alpha_grid)
        if len(alpha_grid) != 2 or min(alpha_grid) < 8:
            raise ValueError(f"Alpha grid {alpha_grid} needs two counts >= 8.")

        self.boundary_tol = float(boundary_tol)
        self.member_tol = float(member_tol)
        self.alpha_grid = alpha_grid
        self.match_tol = float(match_tol)
        self.coeff_tol = float(coeff_tol)

    def __repr__(self):
        return (f"Tolerances(boundary_tol={self.boundary_tol}, "
                f"member_tol={self.member_tol}, alpha_grid={self.alpha_grid}, "
                f"match_tol={self.match_tol}, coeff_tol={self.coeff_tol})")

    @classmethod
    def from_dict(cls, d: dict):
        kwargs = {k: v for k, v in d.items() if not k.startswith("@")}
        return cls(**kwargs)


def pi_map(A: Matrix2) -> Point3:
    """A -> (a21, tr A, det A). """
    return Point3(A.u21, A.u11 + A.u22, A.u11 * A.u22 - A.u12 * A.u21)


def unitarity_residual(U: Matrix2) -> float:
    """max |(U* U - I)_ij|. """
    u = U.as_array()
    return float(np.max(np.abs(u.conj().T @ u - np.eye(2))))


def is_unitary(U: Matrix2, tol: float = BOUNDARY_TOL) -> bool:
    return unitarity_residual(U) <= tol


def is_contraction(A: Matrix2, margin: float = 0.0) -> bool:
    """Whether the operator norm is below 1 - margin. """
    return float(svdvals(A.as_array())[0]) < 1 - margin


def gamma_roots(q: Point2) -> np.ndarray:
    """The two roots of z^2 - s z + p. """
    return Polynomial([q.p, -q.s, 1.0]).roots()


def in_gamma(q: Point2,
             tol: Optional[Tolerances] = None,
             strict: bool = False) -> bool:
    """Membership of Gamma (or of the open G when strict) by the roots of
    z^2 - s z + p.
    """
    tol = tol or Tolerances()
    moduli = np.abs(gamma_roots(q))
    if strict:
        return bool(np.all(moduli < 1 - tol.member_tol))
    return bool(np.all(moduli <= 1 + tol.member_tol))


def b_gamma_residual(q: Point2) -> float:
    """Largest violation among |s| <= 2, |p| = 1 and s = conj(s) p. """
    return max(max(abs(q.s) - 2, 0.0),
               abs(abs(q.p) - 1),
               abs(q.s - q.s.conjugate() * q.p))


def in_b_gamma(q: Point2, tol: Optional[Tolerances] = None) -> bool:
    tol = tol or Tolerances()
    return b_gamma_residual(q) <= tol.boundary_tol


def _abs_psi_on_grid(radii: np.ndarray, angles: np.ndarray,
                     x: Point3) -> np.ndarray:
    alpha = radii[:, None] * np.exp(1j * angles)[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.abs(x.a * (1 - np.abs(alpha) ** 2)
                        / (1 - x.s * alpha + x.p * alpha ** 2))
    return np.where(np.isfinite(values), values, np.inf)


def psi(alpha: complex, x: Point3, tol: Optional[Tolerances] = None
        ) -> complex:
    """Psi_alpha(a, s, p) = a (1 - |alpha|^2) / (1 - s alpha + p alpha^2).

    Raises:
        PsiDomainError: when |alpha| >= 1, (s, p) is not in Gamma or the
            denominator numerically vanishes.
    """
    tol = tol or Tolerances()
    if abs(alpha) >= 1:
        raise PsiDomainError(f"|alpha| = {abs(alpha)} must be below 1.")
    if not in_gamma(x.sp, tol):
        raise PsiDomainError(f"{x.sp} is not in Gamma.")
    denominator = 1 - x.s * alpha + x.p * alpha ** 2
    if abs(denominator) < PSI_DENOMINATOR_GUARD:
        raise PsiDomainError(f"Denominator {denominator} is too small.")
    return x.a * (1 - abs(alpha) ** 2) / denominator


def penta_sup(x: Point3, tol: Optional[Tolerances] = None) -> float:
    """Approximate sup of |Psi_alpha(x)| over the disc.

    The polar grid is swept at once and the maximizer is refined by
    REFINE_PASSES halvings of the grid spacing. The result is independent of
    the evaluation order. (s, p) is assumed to be in Gamma.
    """
    tol = tol or Tolerances()
    num_radii, num_angles = tol.alpha_grid
    radii = np.linspace(0, ALPHA_RADIUS_MAX, num_radii)
    angles = np.arange(num_angles) * TWO_PI / num_angles

    values = _abs_psi_on_grid(radii, angles, x)
    i, j = np.unravel_index(np.argmax(values), values.shape)
    best_r, best_t, best = radii[i], angles[j], values[i, j]

    dr, dt = radii[1] - radii[0], angles[1] - angles[0]
    for _ in range(REFINE_PASSES):
        dr, dt = dr / 2, dt / 2
        cand_r = np.clip(best_r + np.array([-dr, 0, dr]), 0, ALPHA_RADIUS_MAX)
        cand_t = best_t + np.array([-dt, 0, dt])
        local = _abs_psi_on_grid(cand_r, cand_t, x)
        k, m = np.unravel_index(np.argmax(local), local.shape)
        if local[k, m] > best:
            best_r, best_t, best = cand_r[k], cand_t[m], local[k, m]

    return float(best)


def in_closed_penta(x: Point3, tol: Optional[Tolerances] = None) -> bool:
    """Membership of the closed pentablock: (s, p) in Gamma and
    |Psi_alpha(a, s, p)| <= 1 for all alpha in the disc.

    The sup over alpha is approximated by penta_sup, so the test is exact
    only up to the grid resolution and member_tol.
    """
    tol = tol or Tolerances()
    if not in_gamma(x.sp, tol):
        return False
    return penta_sup(x, tol) <= 1 + tol.member_tol


def k0_residuals(x: Point3) -> "OrderedDict[str, float]":
    """Residuals of the K0 conditions in the fixed diagnostic order. """
    return OrderedDict([
        ("|p|=1", abs(abs(x.p) - 1)),
        ("s=conj(s)p", abs(x.s - x.s.conjugate() * x.p)),
        ("|s|<=2", max(abs(x.s) - 2, 0.0)),
        ("|a|^2=1-|s|^2/4", abs(abs(x.a) ** 2 - (1 - abs(x.s) ** 2 / 4)))])


def first_k0_violation(x: Point3, tol: Optional[Tolerances] = None
                       ) -> Optional[str]:
    tol = tol or Tolerances()
    for name, residual in k0_residuals(x).items():
        if residual > tol.boundary_tol:
            return name
    return None


def in_K0(x: Point3, tol: Optional[Tolerances] = None) -> bool:
    """K0 = {(a, s, p): (s, p) in b Gamma, |a|^2 = 1 - |s|^2 / 4}. """
    return first_k0_violation(x, tol) is None


def k1_residual(x: Point3) -> float:
    excess = abs(x.a) ** 2 - (1 - abs(x.s) ** 2 / 4)
    return max(b_gamma_residual(x.sp), excess, 0.0)


def in_K1(x: Point3, tol: Optional[Tolerances] = None) -> bool:
    """K1 = {(a, s, p): (s, p) in b Gamma, |a|^2 <= 1 - |s|^2 / 4}. """
    tol = tol or Tolerances()
    return k1_residual(x) <= tol.boundary_tol
