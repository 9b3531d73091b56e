# -*- coding: utf-8 -*-
import json
from typing import Optional, Tuple

import numpy as np
from monty.json import MontyEncoder, MSONable
from monty.serialization import loadfn
from numpy.polynomial import polynomial as npp

from pypenta.core.blaschke import (
    BlaschkeProduct, check_in_closed_disc, extract_blaschke)
from pypenta.core.config import (
    CIRCLE_SAMPLES, DISC_SAMPLE_RADIUS, DISC_SAMPLES, SAMPLING_SEED,
    UNIMODULAR_TOL)
from pypenta.core.domains import (
    Point2, Point3, Tolerances, in_closed_penta)
from pypenta.core.error_classes import (
    DegreeBoundError, DenominatorInDiscError, DenominatorMismatchError,
    DenominatorZeroError, GammaPartError, IdentityResidualError,
    InnerConditionError, InvalidInputError, MirroredZeroError,
    ModulusBoundError, N1ConstantTermError, N1DegreeError,
    NotUnimodularError, PolynomialDegreeError, SelfInversiveError,
    UnreducedError)
from pypenta.core.polynomial import (
    Polynomial, RationalFunction, mirrored_root_pairs)
from pypenta.util.logger import get_logger
from pypenta.util.tools import (
    complex_to_pair, pair_to_complex, unit_circle_points)

__author__ = "pypenta developers"

logger = get_logger(__name__)

MIN_SAMPLES = 16


class GammaInnerFunction(MSONable):
    """h = (N / D, D^{~n} / D), a rational Gamma-inner function.

    Instances are validated by make_gamma_inner.
    """

    def __init__(self, N: Polynomial, D: Polynomial, n: int):
        self.N = N
        self.D = D
        self.n = int(n)

    @property
    def s(self) -> RationalFunction:
        return RationalFunction(self.N, self.D)

    @property
    def p(self) -> RationalFunction:
        return RationalFunction(self.D.conj_reflect(self.n), self.D)

    def values(self, lam) -> Tuple[np.ndarray, np.ndarray]:
        check_in_closed_disc(lam)
        d = self.D(lam)
        return self.N(lam) / d, self.D.conj_reflect(self.n)(lam) / d

    def __repr__(self):
        return f"GammaInnerFunction(N={self.N!r}, D={self.D!r}, n={self.n})"

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "N": self.N.to_pairs(),
                "D": self.D.to_pairs(),
                "n": self.n}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(Polynomial.from_dict(d["N"]), Polynomial.from_dict(d["D"]),
                   d["n"])


class PentaInnerFunction(MSONable):
    """x = (B N1 / D, N2 / D, D^{~n} / D), a rational P-inner function.

    Instances are validated by make_penta_inner, while the constructor only
    stores the data so that tampered instances can still be verified.
    """

    def __init__(self,
                 blaschke: BlaschkeProduct,
                 N1: Polynomial,
                 N2: Polynomial,
                 D: Polynomial,
                 n: int):
        self.blaschke = blaschke
        self.N1 = N1
        self.N2 = N2
        self.D = D
        self.n = int(n)

    @property
    def gamma_part(self) -> GammaInnerFunction:
        return GammaInnerFunction(self.N2, self.D, self.n)

    @property
    def x1(self) -> RationalFunction:
        return self.blaschke.as_rational() * RationalFunction(self.N1, self.D)

    @property
    def x2(self) -> RationalFunction:
        return RationalFunction(self.N2, self.D)

    @property
    def x3(self) -> RationalFunction:
        return RationalFunction(self.D.conj_reflect(self.n), self.D)

    def values(self, lam) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(x1, x2, x3) at points of the closed disc.

        Raises:
            OutsideDiscError: when a point lies outside the closed disc.
        """
        check_in_closed_disc(lam)
        d = self.D(lam)
        x1 = self.blaschke(lam) * self.N1(lam) / d
        x2 = self.N2(lam) / d
        x3 = self.D.conj_reflect(self.n)(lam) / d
        return x1, x2, x3

    def scaled(self, t: complex) -> "PentaInnerFunction":
        """(N1, N2, D) multiplied by t, which leaves x unchanged for real t.
        """
        return PentaInnerFunction(self.blaschke, self.N1 * t, self.N2 * t,
                                  self.D * t, self.n)

    def __repr__(self):
        return (f"PentaInnerFunction(blaschke={self.blaschke!r}, "
                f"N1={self.N1!r}, N2={self.N2!r}, D={self.D!r}, n={self.n})")

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "blaschke": self.blaschke.as_dict(),
                "N1": self.N1.to_pairs(),
                "N2": self.N2.to_pairs(),
                "D": self.D.to_pairs(),
                "n": self.n}

    @classmethod
    def from_dict(cls, d: dict):
        blaschke = d.get("blaschke") or BlaschkeProduct()
        if not isinstance(blaschke, BlaschkeProduct):
            blaschke = BlaschkeProduct.from_dict(blaschke)
        return cls(blaschke,
                   Polynomial.from_dict(d["N1"]),
                   Polynomial.from_dict(d["N2"]),
                   Polynomial.from_dict(d["D"]),
                   d["n"])

    @classmethod
    def load_json(cls, filename="inner.json"):
        return loadfn(filename)

    def to_json_file(self, filename="inner.json"):
        with open(filename, "w") as fw:
            json.dump(self.as_dict(), fw, indent=2, cls=MontyEncoder)


class ScalingWitness(MSONable):
    """Nonzero constant t relating two polynomial representations.

    t is complex in general, e.g. for scaled() with a complex factor.
    normalize_triple always returns a real t, which is_real reports.
    """

    def __init__(self, t: complex):
        t = complex(t)
        if t == 0 or not np.isfinite(t):
            raise ValueError(f"Scaling {t} must be finite and nonzero.")
        self.t = t

    @property
    def is_real(self) -> bool:
        return self.t.imag == 0

    def __repr__(self):
        return f"ScalingWitness(t={self.t})"

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "t": complex_to_pair(self.t)}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(pair_to_complex(d["t"]))


class VerificationReport(MSONable):
    """Numerical evidence that x maps the circle into K0. """

    def __init__(self,
                 circle_residual: float,
                 bgamma_residual: float,
                 disc_pass_fraction: float,
                 coeff_residual: float,
                 passed: bool):
        """
        Args:
            circle_residual (float):
                max |4|x1|^2 + |x2|^2 - 4| over the circle samples.
            bgamma_residual (float):
                max b Gamma residual of (x2, x3) over the circle samples.
            disc_pass_fraction (float):
                Fraction of disc samples lying in the closed pentablock.
            coeff_residual (float):
                Relative residual of the coefficient identity.
            passed (bool):
                Whether all the above are within tolerance.
        """
        self.circle_residual = float(circle_residual)
        self.bgamma_residual = float(bgamma_residual)
        self.disc_pass_fraction = float(disc_pass_fraction)
        self.coeff_residual = float(coeff_residual)
        self.passed = bool(passed)

    def __repr__(self):
        lines = [f"circle residual    : {self.circle_residual:.3e}",
                 f"b Gamma residual   : {self.bgamma_residual:.3e}",
                 f"disc pass fraction : {self.disc_pass_fraction}",
                 f"coeff residual     : {self.coeff_residual:.3e}",
                 f"pass               : {self.passed}"]
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "circle_residual": self.circle_residual,
                "bgamma_residual": self.bgamma_residual,
                "disc_pass_fraction": self.disc_pass_fraction,
                "coeff_residual": self.coeff_residual,
                "pass": self.passed}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(d["circle_residual"], d["bgamma_residual"],
                   d["disc_pass_fraction"], d["coeff_residual"], d["pass"])


def _relative_diff(a: Polynomial, b: Polynomial) -> float:
    scale = max(a.max_abs_coeff, b.max_abs_coeff)
    return a.max_coeff_diff(b) / scale if scale else 0.0


def make_gamma_inner(N: Polynomial, D: Polynomial, n: int,
                     tol: Optional[Tolerances] = None) -> GammaInnerFunction:
    """Validate (N, D, n) as a rational Gamma-inner function.

    The conditions are
        (1) deg(N) <= n and deg(D) <= n,
        (2) N^{~n} = N,
        (3) D has no zero in the closed disc,
        (4) |N| <= 2 |D| on the circle.

    Raises:
        DegreeBoundError, SelfInversiveError, DenominatorZeroError,
        ModulusBoundError: for the first violated condition.
    """
    tol = tol or Tolerances()
    if n < 0:
        raise DegreeBoundError(f"n = {n} must be non-negative.")
    if N.degree > n or D.degree > n:
        raise DegreeBoundError(
            f"deg(N) = {N.degree} and deg(D) = {D.degree} exceed n = {n}.")
    if _relative_diff(N.conj_reflect(n), N) > tol.coeff_tol:
        raise SelfInversiveError(f"{N} is not self-inversive of degree {n}.")
    if D.is_zero:
        raise DenominatorZeroError("D is the zero polynomial.")
    if D.degree >= 1:
        roots = D.roots()
        inside = roots[np.abs(roots) <= 1 + tol.match_tol]
        if inside.size:
            raise DenominatorZeroError(
                f"D vanishes at {inside.tolist()} in the closed disc.")

    circle = unit_circle_points(CIRCLE_SAMPLES)
    d_abs = np.abs(D(circle))
    excess = float(np.max(np.abs(N(circle)) - 2 * d_abs))
    # excess is measured relative to max |D| on the circle
    if excess > tol.boundary_tol * max(1.0, float(np.max(d_abs))):
        raise ModulusBoundError(f"|N| exceeds 2|D| by {excess} on the circle.")

    return GammaInnerFunction(N, D, n)


def gamma_inner_eval(h: GammaInnerFunction, lam: complex) -> Point2:
    s, p = h.values(lam)
    return Point2(s, p)


def p_degree(h: GammaInnerFunction) -> int:
    """Degree of the reduced D^{~n} / D, which equals n for valid h. """
    return h.p.reduce().degree


def coefficient_identity_residual(x: PentaInnerFunction) -> float:
    """Relative residual of N1 N1^{~n} = D D^{~n} - N2 N2^{~n} / 4.

    The identity is equivalent to |N1|^2 = |D|^2 - |N2|^2 / 4 on the circle.
    Returns inf when a degree exceeds n.
    """
    try:
        lhs = x.N1 * x.N1.conj_reflect(x.n)
        dd = x.D * x.D.conj_reflect(x.n)
        nn = x.N2 * x.N2.conj_reflect(x.n) / 4
    except PolynomialDegreeError:
        return float("inf")
    scale = max(lhs.max_abs_coeff, dd.max_abs_coeff, nn.max_abs_coeff)
    return lhs.max_coeff_diff(dd - nn) / scale if scale else 0.0


def make_penta_inner(blaschke: BlaschkeProduct,
                     N1: Polynomial,
                     N2: Polynomial,
                     D: Polynomial,
                     n: int,
                     tol: Optional[Tolerances] = None) -> PentaInnerFunction:
    """Validate (B, N1, N2, D, n) as a rational P-inner function.

    Besides the identity, deg(N1) <= n is required and N1(0) != 0, so that
    every zero at the origin lives in B. No root a of N1 may have 1/conj(a)
    as a root of D; such a factor belongs in B.

    Raises:
        GammaPartError: when (N2, D, n) is not a Gamma-inner function.
        N1DegreeError: when deg(N1) > n.
        N1ConstantTermError: when N1(0) = 0.
        MirroredZeroError: when N1 and D share a mirrored root pair.
        IdentityResidualError: when the coefficient identity fails.
    """
    tol = tol or Tolerances()
    try:
        make_gamma_inner(N2, D, n, tol)
    except InnerConditionError as e:
        raise GammaPartError(f"(N2, D, n) is not Gamma-inner; {e}")

    if N1.degree > n:
        raise N1DegreeError(f"deg(N1) = {N1.degree} exceeds n = {n}.")
    if N1.is_zero or abs(N1.coeffs[0]) <= tol.coeff_tol * N1.max_abs_coeff:
        raise N1ConstantTermError(
            "N1(0) = 0; zeros at the origin must be moved into B.")
    pairs = mirrored_root_pairs(N1, D, tol.match_tol)
    if pairs:
        raise MirroredZeroError(
            f"N1 vanishes at {[a for a, _ in pairs]} whose mirrors are roots "
            "of D; move these zeros into B.")

    x = PentaInnerFunction(blaschke, N1, N2, D, n)
    residual = coefficient_identity_residual(x)
    if residual > tol.coeff_tol:
        raise IdentityResidualError(
            f"N1 N1~ = D D~ - N2 N2~ / 4 fails with residual {residual}.")
    return x


def penta_inner_eval(x: PentaInnerFunction, lam: complex) -> Point3:
    x1, x2, x3 = x.values(lam)
    return Point3(x1, x2, x3)


def sufficient_condition_residual(x: PentaInnerFunction,
                                  circle_samples: int = CIRCLE_SAMPLES
                                  ) -> float:
    """max | |x1|^2 - 1 + |x2|^2 / 4 | over the circle samples. """
    x1, x2, _ = x.values(unit_circle_points(circle_samples))
    return float(np.max(np.abs(np.abs(x1) ** 2 - 1 + np.abs(x2) ** 2 / 4)))


def disc_sample_points(num: int, seed: int = SAMPLING_SEED) -> np.ndarray:
    """Seeded points drawn uniformly from the disc of DISC_SAMPLE_RADIUS. """
    rng = np.random.default_rng(seed)
    radii = DISC_SAMPLE_RADIUS * np.sqrt(rng.random(num))
    return radii * np.exp(2j * np.pi * rng.random(num))


def verify_penta_inner(x: PentaInnerFunction,
                       circle_samples: int = CIRCLE_SAMPLES,
                       disc_samples: int = DISC_SAMPLES,
                       tol: Optional[Tolerances] = None
                       ) -> VerificationReport:
    """Check the defining property of x by sampling.

    Failures are carried by the report rather than raised.
    """
    tol = tol or Tolerances()
    if min(circle_samples, disc_samples) < MIN_SAMPLES:
        raise InvalidInputError(
            f"Sample counts must be at least {MIN_SAMPLES}, got "
            f"{circle_samples} and {disc_samples}.")

    x1, x2, x3 = x.values(unit_circle_points(circle_samples))
    circle_residual = np.max(np.abs(4 * np.abs(x1) ** 2
                                    + np.abs(x2) ** 2 - 4))
    bgamma_residual = np.max(np.maximum.reduce(
        [np.maximum(np.abs(x2) - 2, 0.0),
         np.abs(np.abs(x3) - 1),
         np.abs(x2 - np.conj(x2) * x3)]))

    d1, d2, d3 = x.values(disc_sample_points(disc_samples))
    # non-finite values fail the membership test
    passed = [bool(np.isfinite([a, s, p]).all())
              and in_closed_penta(Point3(a, s, p), tol)
              for a, s, p in zip(d1, d2, d3)]
    disc_pass_fraction = sum(passed) / disc_samples

    coeff_residual = coefficient_identity_residual(x)

    ok = (max(circle_residual, bgamma_residual, coeff_residual)
          <= tol.boundary_tol and disc_pass_fraction == 1)
    report = VerificationReport(circle_residual, bgamma_residual,
                                disc_pass_fraction, coeff_residual, ok)
    if not ok:
        logger.warning(f"Verification failed.\n{report}")
    return report


def multiply_blaschke(x: PentaInnerFunction, B2: BlaschkeProduct
                      ) -> PentaInnerFunction:
    """(B2 x1, x2, x3), again P-inner. """
    return PentaInnerFunction(x.blaschke * B2, x.N1, x.N2, x.D, x.n)


def divide_blaschke(x: PentaInnerFunction,
                    B2: Optional[BlaschkeProduct] = None,
                    tol: Optional[Tolerances] = None) -> PentaInnerFunction:
    """(x1 / B2, x2, x3); the whole Blaschke part is removed when B2 is None.

    Raises:
        BlaschkeZeroError: when a zero of B2 is not a zero of x's B.
    """
    tol = tol or Tolerances()
    if B2 is None:
        blaschke = BlaschkeProduct()
    else:
        blaschke = x.blaschke.divide(B2, tol.match_tol)
    return PentaInnerFunction(blaschke, x.N1, x.N2, x.D, x.n)


def check_denominator_compatibility(x1: RationalFunction,
                                    x2: RationalFunction,
                                    tol: Optional[Tolerances] = None
                                    ) -> ScalingWitness:
    """Find t with g1 = t g2 for the denominators of reduced x1 and x2.

    x1 is expected to be free of Blaschke factors.

    Raises:
        UnreducedError: when an input is not reduced.
        DenominatorInDiscError: when g2 vanishes on the closed disc.
        DenominatorMismatchError: when the root multisets differ.
    """
    tol = tol or Tolerances()
    if not (x1.reduced and x2.reduced):
        raise UnreducedError("Both functions must be reduced.")
    g1, g2 = x1.denominator, x2.denominator

    roots1 = list(g1.roots()) if g1.degree >= 1 else []
    roots2 = g2.roots() if g2.degree >= 1 else np.array([])
    if np.any(np.abs(roots2) <= 1 + tol.match_tol):
        raise DenominatorInDiscError(
            f"Denominator {g2} vanishes on the closed disc.")

    for r in roots2:
        distances = np.abs(np.array(roots1) - r) if roots1 else []
        if not len(distances) or np.min(distances) > tol.match_tol:
            raise DenominatorMismatchError(
                f"Root {r} of the second denominator is unmatched.")
        roots1.pop(int(np.argmin(distances)))
    if roots1:
        raise DenominatorMismatchError(
            f"Root {roots1[0]} of the first denominator is unmatched.")

    return ScalingWitness(g1.leading_coefficient / g2.leading_coefficient)


def normalize_triple(x: PentaInnerFunction
                     ) -> Tuple[PentaInnerFunction, ScalingWitness]:
    """Canonical representative of (N1, N2, D) up to a real scalar.

    D is scaled to unit Euclidean coefficient norm with Re D(0) > 0, or
    Im D(0) > 0 when D(0) is purely imaginary.
    """
    d0 = complex(x.D.coeffs[0])
    if abs(d0.real) > UNIMODULAR_TOL * abs(d0):
        sign = np.sign(d0.real)
    else:
        sign = np.sign(d0.imag)
    t = float(sign / np.linalg.norm(x.D.coeffs))
    return x.scaled(t), ScalingWitness(t)


def make_beta_example(beta: complex) -> PentaInnerFunction:
    """((beta - conj(beta) lam) / 2, beta + conj(beta) lam, lam), |beta| = 1.

    Raises:
        InvalidInputError: when beta is not finite.
        NotUnimodularError: when |beta| != 1.
    """
    beta = complex(beta)
    if not np.isfinite(beta):
        raise InvalidInputError(f"beta = {beta} must be finite.")
    if abs(abs(beta) - 1) > UNIMODULAR_TOL:
        raise NotUnimodularError(f"|beta| = {abs(beta)} must be 1.")
    return make_penta_inner(BlaschkeProduct(),
                            Polynomial([beta / 2, -beta.conjugate() / 2]),
                            Polynomial([beta, beta.conjugate()]),
                            Polynomial([1.0]),
                            1)


def make_B0B_example(blaschke: BlaschkeProduct) -> PentaInnerFunction:
    """x = (B, 0, B).

    D = exp(-i theta / 2) prod (1 - conj(a_j) lam) makes D^{~n} / D = B, and
    N1 = D makes x1 = B.
    """
    D = Polynomial([np.exp(-0.5j * blaschke.theta)])
    for a in blaschke.zeros:
        D = D * Polynomial([1.0, -np.conj(a)])
    return make_penta_inner(blaschke, D, Polynomial(), D, blaschke.degree)


def compose_inner(x: PentaInnerFunction,
                  phi: BlaschkeProduct,
                  tol: Optional[Tolerances] = None) -> PentaInnerFunction:
    """x o phi for a Blaschke product phi of degree m >= 1.

    With phi = P / Q, every polynomial f of (N1, N2, D) becomes
    exp(-i theta n / 2) Q^n f(P / Q), of declared degree n m, and B becomes
    B o phi. Zeros of the new N1 at the origin are moved into B.
    """
    if phi.degree < 1:
        raise ValueError("Composition requires a non-constant phi.")
    tol = tol or Tolerances()
    rational = phi.as_rational()
    P, Q = rational.numerator, rational.denominator
    phase = np.exp(-0.5j * phi.theta * x.n)

    N1, N2, D = [f.compose(P, Q, x.n) * phase for f in (x.N1, x.N2, x.D)]
    blaschke = x.blaschke.compose(phi)
    origin_zeros = 0
    while N1.degree >= 1 and abs(N1.coeffs[0]) <= (tol.coeff_tol
                                                   * N1.max_abs_coeff):
        N1 = Polynomial(N1.coeffs[1:])
        origin_zeros += 1
    if origin_zeros:
        blaschke = blaschke * BlaschkeProduct([0.0] * origin_zeros)
    return make_penta_inner(blaschke, N1, N2, D, x.n * phi.degree, tol)


def _numerator_over(r: RationalFunction, D: Polynomial,
                    tol: Tolerances) -> Polynomial:
    """N with r = N / D when the denominator of r divides D. """
    quotient, remainder = npp.polydiv(D.coeffs, r.denominator.coeffs)
    if np.max(np.abs(remainder)) > tol.coeff_tol * D.max_abs_coeff:
        raise DenominatorMismatchError(
            f"{r.denominator} does not divide {D}.")
    return r.numerator * Polynomial(quotient)


def decompose_penta_inner(x1: RationalFunction,
                          x2: RationalFunction,
                          x3: RationalFunction,
                          tol: Optional[Tolerances] = None
                          ) -> PentaInnerFunction:
    """Recover (B, N1, N2, D, n) from a rational P-inner (x1, x2, x3).

    x3 = f / g reduced fixes n = deg(x3) and D = exp(i phi) g, where the
    phase makes D^{~n} / D = f / g. x2 and the Blaschke-free part of x1 are
    then rewritten over D.

    Raises:
        GammaPartError: when x3 is not of the form D^{~n} / D.
        DenominatorMismatchError: when x1 or x2 does not fit over D.
        InnerConditionError: when the recovered data are not P-inner.
    """
    tol = tol or Tolerances()
    r3 = x3.reduce(tol.match_tol)
    n = r3.degree
    f, g = r3.numerator, r3.denominator
    reflected = g.conj_reflect(n).padded(n + 1)
    omega = complex(np.vdot(reflected, f.padded(n + 1))
                    / np.vdot(reflected, reflected))
    if (abs(abs(omega) - 1) > tol.coeff_tol
            or not f.allclose(g.conj_reflect(n) * omega, tol.coeff_tol)):
        raise GammaPartError(f"{x3} is not of the form D~n / D.")
    D = g * np.exp(-0.5j * np.angle(omega))

    N2 = _numerator_over(x2.reduce(tol.match_tol), D, tol)
    blaschke, residual = extract_blaschke(x1.reduce(tol.match_tol),
                                          tol.match_tol)
    N1 = _numerator_over(residual, D, tol)
    return make_penta_inner(blaschke, N1, N2, D, n, tol)
