# -*- coding: utf-8 -*-
from typing import Tuple

import numpy as np
from monty.json import MSONable

from pypenta.core.config import (
    BLASCHKE_ZERO_MARGIN, DISC_EVAL_SLACK, MATCH_TOL, TWO_PI)
from pypenta.core.error_classes import (
    BlaschkeZeroError, DenominatorInDiscError, OutsideDiscError,
    UnreducedError)
from pypenta.core.polynomial import (
    Polynomial, RationalFunction, mirrored_root_pairs)
from pypenta.util.logger import get_logger
from pypenta.util.tools import array_to_pairs, pairs_to_array

__author__ = "pypenta developers"

logger = get_logger(__name__)


def check_in_closed_disc(lam) -> None:
    if np.any(np.abs(np.asarray(lam)) > 1 + DISC_EVAL_SLACK):
        raise OutsideDiscError(f"{lam} is outside the closed unit disc.")


class BlaschkeProduct(MSONable):
    """B(z) = exp(i theta) prod_j (z - a_j) / (1 - conj(a_j) z).

    The empty product is the unimodular constant exp(i theta).
    """

    def __init__(self, zeros=(), theta: float = 0.0):
        zeros = np.array(zeros, dtype=complex).ravel()
        if np.any(np.abs(zeros) >= 1 - BLASCHKE_ZERO_MARGIN):
            raise BlaschkeZeroError(
                f"Zeros {zeros} must lie in the open unit disc.")
        zeros.flags.writeable = False
        self._zeros = zeros
        self._theta = float(theta) % TWO_PI

    @property
    def zeros(self) -> np.ndarray:
        return self._zeros

    @property
    def theta(self) -> float:
        return self._theta

    @property
    def phase(self) -> complex:
        return complex(np.exp(1j * self._theta))

    @property
    def degree(self) -> int:
        return len(self._zeros)

    def evaluate(self, lam):
        """Value at points of the closed disc.

        Raises:
            OutsideDiscError: when |lambda| > 1, where poles may live.
        """
        check_in_closed_disc(lam)
        lam = np.asarray(lam, dtype=complex)
        result = np.full_like(lam, self.phase)
        for a in self._zeros:
            result = result * (lam - a) / (1 - np.conj(a) * lam)
        return complex(result) if result.ndim == 0 else result

    __call__ = evaluate

    def as_rational(self) -> RationalFunction:
        numerator = Polynomial.from_roots(self._zeros, leading=self.phase)
        denominator = Polynomial([1.0])
        for a in self._zeros:
            denominator = denominator * Polynomial([1.0, -np.conj(a)])
        return RationalFunction(numerator, denominator, reduced=True)

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(np.concatenate([self._zeros, other.zeros]),
                               self._theta + other.theta)

    def divide(self, other: "BlaschkeProduct",
               match_tol: float = MATCH_TOL) -> "BlaschkeProduct":
        """B / B2 when every zero of B2 is also a zero of B.

        Raises:
            BlaschkeZeroError: when a zero of B2 is not found in B.
        """
        zeros = list(self._zeros)
        for b in other.zeros:
            distances = np.abs(np.array(zeros) - b) if zeros else []
            if not len(distances) or np.min(distances) > match_tol:
                raise BlaschkeZeroError(f"Zero {b} is not a zero of {self}.")
            zeros.pop(int(np.argmin(distances)))
        return BlaschkeProduct(zeros, self._theta - other.theta)

    def compose(self, phi: "BlaschkeProduct") -> "BlaschkeProduct":
        """B o phi, again a Blaschke product of degree deg(B) deg(phi). """
        if phi.degree == 0:
            return BlaschkeProduct([], np.angle(self(phi.phase)))

        phi_rational = phi.as_rational()
        p, q = phi_rational.numerator, phi_rational.denominator
        zeros = []
        for a in self._zeros:
            zeros.extend((p - q * a).roots())

        base = BlaschkeProduct(zeros)(1.0)
        theta = np.angle(self(phi(1.0)) / base)
        return BlaschkeProduct(zeros, theta)

    def __repr__(self):
        return (f"BlaschkeProduct(zeros={self._zeros.tolist()}, "
                f"theta={self._theta})")

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "zeros": array_to_pairs(self._zeros),
                "theta": self._theta}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(pairs_to_array(d.get("zeros", [])),
                   float(d.get("theta", 0.0)))


def extract_blaschke(r: RationalFunction,
                     match_tol: float = MATCH_TOL
                     ) -> Tuple[BlaschkeProduct, RationalFunction]:
    """Factor r = B (f / g) with f / g free of Blaschke factors.

    B collects the numerator roots at the origin and every numerator root a
    in the disc whose mirror 1 / conj(a) is a denominator root. The phase is
    fixed so that the residual is real and positive at the origin whenever
    it does not vanish there.

    Raises:
        UnreducedError: when r is not reduced.
        DenominatorInDiscError: when the denominator vanishes on the closed
            disc.
    """
    if not r.reduced:
        raise UnreducedError("Blaschke factors are extracted from reduced "
                             "functions only.")
    num, den = r.numerator, r.denominator
    if den.degree >= 1 and np.any(np.abs(den.roots()) <= 1 + match_tol):
        raise DenominatorInDiscError(
            f"Denominator of {r} vanishes on the closed unit disc.")
    if num.is_zero:
        return BlaschkeProduct(), r

    zeros = []
    while (num.degree >= 1
           and abs(num.coeffs[0]) <= match_tol * num.max_abs_coeff):
        num = Polynomial(num.coeffs[1:])
        zeros.append(0j)

    scale = 1.0 + 0j
    for a, mirror in mirrored_root_pairs(num, den, match_tol):
        if abs(a) >= 1 - BLASCHKE_ZERO_MARGIN:
            continue
        # (z - a) / (z - 1 / conj(a)) = -conj(a) (z - a) / (1 - conj(a) z)
        num, den = num.deflate(a), den.deflate(mirror)
        scale *= -np.conj(a)
        zeros.append(a)

    num = num * scale
    theta = 0.0
    value_at_origin = num(0) / den(0)
    if abs(value_at_origin) > 0:
        theta = float(np.angle(value_at_origin))
        num = num * np.exp(-1j * theta)

    if zeros:
        logger.info(f"Extracted Blaschke zeros {zeros}.")
    return BlaschkeProduct(zeros, theta), RationalFunction(num, den, True)
