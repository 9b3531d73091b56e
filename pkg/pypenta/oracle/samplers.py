# -*- coding: utf-8 -*-
"""Seeded random generators for the matrix-image cross-checks.

Every stream is a numpy Generator on the PCG64 bit generator. The streams of
the audit campaigns are spawned from SeedSequence(seed) in a fixed order, so
reports do not depend on the order in which campaigns run.
"""
from typing import Optional

import numpy as np
from monty.json import MSONable
from scipy.linalg import qr, svdvals

from pypenta.core.blaschke import BlaschkeProduct
from pypenta.core.config import AUDIT_COUNT, AUDIT_SEED, CONTRACTION_MARGIN
from pypenta.core.domains import Matrix2, Point3, Tolerances
from pypenta.core.inner import (
    GammaInnerFunction, PentaInnerFunction, compose_inner, make_B0B_example,
    make_beta_example, make_gamma_inner, make_penta_inner, multiply_blaschke)
from pypenta.core.polynomial import Polynomial
from pypenta.util.logger import get_logger

__author__ = "pypenta developers"

logger = get_logger(__name__)

NUM_STREAMS = 4
# Random Blaschke zeros and reflected denominator roots stay within this
# radius, which keeps the sampled functions well conditioned.
ZERO_RADIUS = 0.8


class SamplerConfig(MSONable):

    def __init__(self,
                 seed: int = AUDIT_SEED,
                 count: int = AUDIT_COUNT,
                 contraction_margin: float = CONTRACTION_MARGIN):
        """
        Args:
            seed (int):
                Master seed, a 64-bit unsigned integer.
            count (int):
                Number of samples per campaign.
            contraction_margin (float):
                Sampled contractions have norm below 1 - contraction_margin.
        """
        if not 0 <= seed < 2 ** 64:
            raise ValueError(f"Seed {seed} is not a 64-bit unsigned integer.")
        if count < 1:
            raise ValueError(f"Count {count} must be positive.")
        if not 0 < contraction_margin < 1:
            raise ValueError(f"Margin {contraction_margin} is not in (0, 1).")
        self.seed = int(seed)
        self.count = int(count)
        self.contraction_margin = float(contraction_margin)

    def generator(self, stream: int = 0) -> np.random.Generator:
        """Independent generator of the given stream index. """
        if not 0 <= stream < NUM_STREAMS:
            raise ValueError(f"Stream {stream} is not in [0, {NUM_STREAMS}).")
        child = np.random.SeedSequence(self.seed).spawn(NUM_STREAMS)[stream]
        return np.random.Generator(np.random.PCG64(child))


def _ginibre(rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal((2, 2))
            + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)


def sample_contraction(rng: np.random.Generator,
                       margin: float = CONTRACTION_MARGIN) -> Matrix2:
    """Gaussian matrix rescaled to a norm drawn uniformly from [0, 1-margin).
    """
    z = _ginibre(rng)
    norm = rng.uniform(0, 1 - margin)
    return Matrix2.from_array(z * (norm / svdvals(z)[0]))


def sample_unitary(rng: np.random.Generator) -> Matrix2:
    """Haar unitary from the QR decomposition with phase correction. """
    q, r = qr(_ginibre(rng))
    d = np.diag(r)
    return Matrix2.from_array(q * (d / np.abs(d)))


def sample_k0_point(rng: np.random.Generator) -> Point3:
    """(sqrt(1 - c^2) e^{i eta}, 2c e^{i theta}, e^{2 i theta}). """
    c = rng.uniform(-1, 1)
    theta, eta = rng.uniform(0, 2 * np.pi, 2)
    return Point3(np.sqrt(1 - c ** 2) * np.exp(1j * eta),
                  2 * c * np.exp(1j * theta),
                  np.exp(2j * theta))


def _disc_points(rng: np.random.Generator, num: int,
                 radius: float) -> np.ndarray:
    radii = radius * np.sqrt(rng.random(num))
    return radii * np.exp(2j * np.pi * rng.random(num))


def sample_blaschke(rng: np.random.Generator,
                    degree: int,
                    phase: bool = True) -> BlaschkeProduct:
    theta = rng.uniform(0, 2 * np.pi) if phase else 0.0
    return BlaschkeProduct(_disc_points(rng, degree, ZERO_RADIUS), theta)


def sample_gamma_inner(rng: np.random.Generator,
                       n: int,
                       tol: Optional[Tolerances] = None
                       ) -> GammaInnerFunction:
    """(N, D, n) with N = beta D + conj(beta) D^{~n} and |beta| <= 1.

    D has a random degree up to n and its roots outside the closed disc.
    """
    degree = int(rng.integers(0, n + 1))
    roots = 1 / np.conj(_disc_points(rng, degree, ZERO_RADIUS))
    leading = complex(*rng.standard_normal(2))
    D = Polynomial.from_roots(roots, leading=leading)
    beta = complex(_disc_points(rng, 1, 1.0)[0])
    N = D * beta + D.conj_reflect(n) * beta.conjugate()
    return make_gamma_inner(N, D, n, tol)


def sample_penta_inner(rng: np.random.Generator,
                       max_degree: int = 2,
                       tol: Optional[Tolerances] = None
                       ) -> PentaInnerFunction:
    """Random P-inner function built from the two explicit families.

    A beta instance or an (B, 0, B) instance is composed with a phase-free
    Blaschke map, multiplied by a Blaschke product and scaled by a real t.
    """
    if rng.random() < 0.5:
        x = make_beta_example(np.exp(1j * rng.uniform(0, 2 * np.pi)))
    else:
        degree = int(rng.integers(0, max_degree + 1))
        x = make_B0B_example(sample_blaschke(rng, degree))

    phi = sample_blaschke(rng, int(rng.integers(1, max_degree + 1)),
                          phase=False)
    x = compose_inner(x, phi, tol)
    x = multiply_blaschke(
        x, sample_blaschke(rng, int(rng.integers(0, max_degree + 1))))

    t = rng.uniform(0.1, 10) * rng.choice([-1, 1])
    return make_penta_inner(x.blaschke, x.N1 * t, x.N2 * t, x.D * t, x.n, tol)
