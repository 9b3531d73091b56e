# -*- coding: utf-8 -*-
from typing import List, Optional, Tuple, Union

import numpy as np
from monty.json import MSONable
from numpy.polynomial import polynomial as npp

from pypenta.core.config import (
    EVAL_TOL, MATCH_TOL, MAX_POLY_DEGREE, REDUCTION_SAMPLES, ROOT_TOL,
    SAMPLING_SEED)
from pypenta.core.error_classes import (
    PolynomialDegreeError, ReductionError, UnreducedError)
from pypenta.util.logger import get_logger
from pypenta.util.tools import array_to_pairs, pairs_to_array

__author__ = "pypenta developers"

logger = get_logger(__name__)

Scalar = Union[int, float, complex]


class _ZeroPolynomialDegree:
    """Degree of the zero polynomial.

    Compares below every integer but supports no arithmetic, so that an
    invalid degree never leaks silently into index computations.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, _ZeroPolynomialDegree)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _ZeroPolynomialDegree)

    def __eq__(self, other):
        return isinstance(other, _ZeroPolynomialDegree)

    def __hash__(self):
        return hash("zero polynomial degree")

    def __repr__(self):
        return "-inf"


ZERO_POLYNOMIAL_DEGREE = _ZeroPolynomialDegree()


class Polynomial(MSONable):
    """Complex polynomial; coeffs[i] is the coefficient of lambda^i.

    Trailing zeros are trimmed, so the zero polynomial has empty coeffs.
    Instances are immutable.
    """
    # numpy scalars defer to the reflected operators below.
    __array_ufunc__ = None

    def __init__(self, coeffs=()):
        c = np.array(coeffs, dtype=complex).ravel()
        if not np.all(np.isfinite(c)):
            raise ValueError(f"Coefficients {c} are not finite.")
        nonzero = np.flatnonzero(c)
        c = c[:nonzero[-1] + 1] if nonzero.size else c[:0]
        c.flags.writeable = False
        self._coeffs = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self):
        if self.is_zero:
            return ZERO_POLYNOMIAL_DEGREE
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self._coeffs) == 0

    @property
    def leading_coefficient(self) -> complex:
        return complex(self._coeffs[-1]) if not self.is_zero else 0j

    @property
    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self._coeffs))) if not self.is_zero else 0.

    def padded(self, length: int) -> np.ndarray:
        """Coefficients padded with zeros up to the given length. """
        if length < len(self._coeffs):
            raise PolynomialDegreeError(
                f"Cannot pad {len(self._coeffs)} coefficients to {length}.")
        c = np.zeros(length, dtype=complex)
        c[:len(self._coeffs)] = self._coeffs
        return c

    @classmethod
    def from_roots(cls, roots, leading: Scalar = 1.0) -> "Polynomial":
        roots = np.asarray(roots, dtype=complex).ravel()
        c = np.array([1.0], dtype=complex)
        for r in roots:
            c = np.convolve(c, [-r, 1.0])
        return cls(c * leading)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1.0) -> "Polynomial":
        coeffs = np.zeros(k + 1, dtype=complex)
        coeffs[k] = c
        return cls(coeffs)

    def evaluate(self, lam):
        """Horner evaluation; accepts a scalar or an array of points. """
        lam = np.asarray(lam, dtype=complex)
        result = np.zeros_like(lam)
        for c in self._coeffs[::-1]:
            result = result * lam + c
        return complex(result) if result.ndim == 0 else result

    __call__ = evaluate

    def conj_reflect(self, n: int) -> "Polynomial":
        """f^{~n}(lambda) = lambda^n conj(f(1 / conj(lambda))).

        The coefficient of lambda^(n-i) is the conjugate of that of lambda^i.

        Raises:
            PolynomialDegreeError: when n < 0 or deg(f) > n.
        """
        if n < 0:
            raise PolynomialDegreeError(f"n = {n} must be non-negative.")
        if self.degree > n:
            raise PolynomialDegreeError(
                f"Degree {self.degree} exceeds the reflection degree {n}.")
        return Polynomial(np.conj(self.padded(n + 1)[::-1]))

    def conj_coeffs(self) -> "Polynomial":
        """f^v: every coefficient conjugated, the constant term included. """
        return Polynomial(np.conj(self._coeffs))

    def roots(self) -> np.ndarray:
        """All roots with multiplicity from the companion matrix eigenvalues.

        Raises:
            PolynomialDegreeError: for the zero or a constant polynomial or
                a degree above MAX_POLY_DEGREE.
        """
        if self.degree < 1:
            raise PolynomialDegreeError(
                f"Roots of a polynomial of degree {self.degree} are "
                f"not defined.")
        if self.degree > MAX_POLY_DEGREE:
            raise PolynomialDegreeError(
                f"Degree {self.degree} exceeds {MAX_POLY_DEGREE}.")

        roots = np.sort_complex(npp.polyroots(self._coeffs).astype(complex))

        bound = (ROOT_TOL * (1 + np.abs(roots)) ** self.degree
                 * self.max_abs_coeff)
        residual = np.abs(self.evaluate(roots))
        if np.any(residual > bound):
            logger.warning(f"Root residual {residual.max()} exceeds "
                           f"{bound[np.argmax(residual)]}.")
        return roots

    def deflate(self, root: Scalar) -> "Polynomial":
        """Quotient of the division by (lambda - root); remainder dropped. """
        quotient, _ = npp.polydiv(self._coeffs, np.array([-root, 1.0]))
        return Polynomial(quotient)

    def compose(self, phi_num: "Polynomial", phi_den: "Polynomial",
                n: int) -> "Polynomial":
        """Homogenized composition Q^n p(P/Q) with P/Q = phi_num/phi_den. """
        if self.degree > n:
            raise PolynomialDegreeError(
                f"Degree {self.degree} exceeds the homogenization degree {n}.")
        result = Polynomial()
        for k, c in enumerate(self.padded(n + 1)):
            if c != 0:
                term = phi_num ** k * phi_den ** (n - k)
                result = result + term * complex(c)
        return result

    def max_coeff_diff(self, other: "Polynomial") -> float:
        length = max(len(self._coeffs), len(other.coeffs))
        if length == 0:
            return 0.
        return float(np.max(np.abs(self.padded(length)
                                   - other.padded(length))))

    def allclose(self, other: "Polynomial", tol: float = 1e-12) -> bool:
        """Coefficients agree within tol relative to the larger magnitude. """
        scale = max(1.0, self.max_abs_coeff, other.max_abs_coeff)
        return self.max_coeff_diff(other) <= tol * scale

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        length = max(len(self._coeffs), len(other.coeffs))
        return Polynomial(self.padded(length) + other.padded(length))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        return Polynomial(np.convolve(self._coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar):
        return Polynomial(self._coeffs / scalar)

    def __pow__(self, k: int):
        result = Polynomial([1.0])
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"Polynomial({self._coeffs.tolist()})"

    def to_pairs(self) -> List[List[float]]:
        return array_to_pairs(self._coeffs)

    @classmethod
    def from_pairs(cls, pairs) -> "Polynomial":
        return cls(pairs_to_array(pairs))

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "coeffs": self.to_pairs()}

    @classmethod
    def from_dict(cls, d):
        if isinstance(d, dict):
            d = d["coeffs"]
        return cls.from_pairs(d)


def mirrored_root_pairs(inner: Polynomial,
                        outer: Polynomial,
                        match_tol: float = MATCH_TOL
                        ) -> List[Tuple[complex, complex]]:
    """Pairs (a, b) with a a root of inner, b a root of outer, b = 1/conj(a).

    Each root is used at most once, so multiplicities are respected. Roots
    of inner at the origin have no finite mirror and are never paired.
    """
    if inner.degree < 1 or outer.degree < 1:
        return []
    outer_roots = list(outer.roots())
    pairs = []
    for a in inner.roots():
        if abs(a) <= match_tol or not outer_roots:
            continue
        mirror = 1 / np.conj(a)
        distances = np.abs(np.array(outer_roots) - mirror)
        i = int(np.argmin(distances))
        if distances[i] <= match_tol:
            pairs.append((complex(a), complex(outer_roots.pop(i))))
    return pairs


class RationalFunction(MSONable):
    """numerator / denominator, flagged when known to be coprime. """

    def __init__(self,
                 numerator: Polynomial,
                 denominator: Polynomial,
                 reduced: bool = False):
        if denominator.is_zero:
            raise ValueError("Denominator must not be the zero polynomial.")
        self.numerator = numerator
        self.denominator = denominator
        self.reduced = reduced

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial([1.0]), reduced=True)

    def evaluate(self, lam):
        return self.numerator(lam) / self.denominator(lam)

    __call__ = evaluate

    @property
    def degree(self) -> int:
        """max(deg(f), deg(g)) of the coprime representation f/g.

        Raises:
            UnreducedError: when the function is not marked as reduced.
        """
        if not self.reduced:
            raise UnreducedError("Degree is defined for reduced functions.")
        return max(self.numerator.degree, self.denominator.degree, 0)

    def reduce(self,
               match_tol: float = MATCH_TOL,
               eval_tol: float = EVAL_TOL) -> "RationalFunction":
        """Cancel the roots shared by the numerator and the denominator.

        A denominator root is shared when a numerator root lies within
        match_tol of it or the numerator nearly vanishes there, which keeps
        clustered multiple roots matched.

        Raises:
            ReductionError: when sampled values of the input and the result
                disagree beyond eval_tol.
        """
        num, den = self.numerator, self.denominator
        if num.is_zero:
            return RationalFunction(Polynomial(), Polynomial([1.0]), True)
        if num.degree < 1 or den.degree < 1:
            return RationalFunction(num, den, True)

        num_roots = list(num.roots())
        den_roots = den.roots()
        shared = []
        # num is deflated as roots are found, so that a double root of den
        # cancels a single root of num only once.
        for r in den_roots:
            if not num_roots:
                break
            distances = np.abs(np.array(num_roots) - r)
            i = int(np.argmin(distances))
            residual_bound = (match_tol * num.max_abs_coeff
                              * (1 + abs(r)) ** num.degree)
            if (distances[i] <= match_tol
                    or abs(num(r)) <= residual_bound):
                # Roots of multiplicity > 1 are inaccurate; keep the estimate
                # on which both polynomials nearly vanish.
                r = min((complex(r), complex(num_roots.pop(i))),
                        key=lambda z: max(abs(num(z)) / num.max_abs_coeff,
                                          abs(den(z)) / den.max_abs_coeff))
                shared.append(r)
                num = num.deflate(r)

        if not shared:
            return RationalFunction(num, den, True)

        for r in shared:
            den = den.deflate(r)
        logger.info(f"Cancelled common roots {shared}.")
        result = RationalFunction(num, den, True)
        self._check_same_values(result, den_roots, eval_tol)
        return result

    def _check_same_values(self, other: "RationalFunction", poles,
                           eval_tol: float) -> None:
        rng = np.random.default_rng(SAMPLING_SEED)
        radii = 2 * rng.random(REDUCTION_SAMPLES)
        angles = 2 * np.pi * rng.random(REDUCTION_SAMPLES)
        points = radii * np.exp(1j * angles)
        far = np.min(np.abs(points[:, None] - np.asarray(poles)[None, :]),
                     axis=1) > 1e-2
        points = points[far]
        a, b = self(points), other(points)
        diff = np.abs(a - b)
        bound = eval_tol * np.maximum(1.0, np.abs(a))
        if np.any(diff > bound):
            raise ReductionError(
                f"Reduced function differs by {diff.max()} from the input.")

    def conj_coeffs(self) -> "RationalFunction":
        """r^v = f^v / g^v. """
        return RationalFunction(self.numerator.conj_coeffs(),
                                self.denominator.conj_coeffs(), self.reduced)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.numerator * other.numerator,
                                    self.denominator * other.denominator)
        return RationalFunction(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def __repr__(self):
        return (f"RationalFunction({self.numerator!r} / "
                f"{self.denominator!r}, reduced={self.reduced})")

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "num": self.numerator.to_pairs(),
                "den": self.denominator.to_pairs(),
                "reduced": self.reduced}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(Polynomial.from_pairs(d["num"]),
                   Polynomial.from_pairs(d["den"]),
                   d.get("reduced", False))

