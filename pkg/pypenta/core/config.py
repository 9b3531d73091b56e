# -*- coding: utf-8 -*-
"""Defaults that determine the numerical policy of pypenta. """
from math import pi

# Slack on algebraic boundary identities such as |p| = 1 or s = conj(s) p.
BOUNDARY_TOL = 1e-9
# Slack on inclusion tests decided by the approximate Psi sweep.
MEMBER_TOL = 1e-7
# Absolute distance under which two polynomial roots are regarded as equal.
MATCH_TOL = 1e-8
# Relative tolerance of polynomial coefficient identities.
COEFF_TOL = 1e-9
# Relative tolerance when a reduced rational function is compared by sampling.
EVAL_TOL = 1e-8

# (radial count, angular count) of the polar grid over alpha in the disc.
ALPHA_GRID = (32, 64)
ALPHA_RADIUS_MAX = 1 - 1e-3
REFINE_PASSES = 3
PSI_DENOMINATOR_GUARD = 1e-14

# Points with |lambda| <= 1 + DISC_EVAL_SLACK count as the closed disc.
DISC_EVAL_SLACK = 1e-9
# Blaschke zeros must satisfy |a| < 1 - BLASCHKE_ZERO_MARGIN.
BLASCHKE_ZERO_MARGIN = 1e-12
UNIMODULAR_TOL = 1e-12

MAX_POLY_DEGREE = 64
ROOT_TOL = 1e-9

CIRCLE_SAMPLES = 256
DISC_SAMPLES = 100
# Interior samples are drawn uniformly from the disc of this radius.
DISC_SAMPLE_RADIUS = 1 - 1e-3
REDUCTION_SAMPLES = 64
# Seed of the fixed sample points used by verification and reduction.
SAMPLING_SEED = 0

# Below this |a| the lift is computed but flagged as ill-conditioned.
CONDITIONING_THRESHOLD = 1e-6

CONTRACTION_MARGIN = 1e-3
AUDIT_SEED = 42
AUDIT_COUNT = 1000

TWO_PI = 2 * pi
