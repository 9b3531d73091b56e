# -*- coding: utf-8 -*-
import json
from typing import Callable, List, Optional

import numpy as np
from monty.json import MontyEncoder, MSONable
from monty.serialization import loadfn

from pypenta.core.domains import (
    Point3, Tolerances, in_closed_penta, in_K0, in_K1, k0_residuals,
    k1_residual, penta_sup, pi_map)
from pypenta.core.error_classes import PypentaError
from pypenta.core.lift import lift_to_unitary, project_from_unitary
from pypenta.oracle.samplers import (
    SamplerConfig, sample_contraction, sample_k0_point, sample_unitary)
from pypenta.util.logger import get_logger

__author__ = "pypenta developers"

logger = get_logger(__name__)

K0Predicate = Callable[[Point3, Optional[Tolerances]], bool]


class CampaignResult(MSONable):
    """Pass count and worst residual of one audit campaign.

    The residual of a sample is the size of the violation of the checked
    property, so the worst residual is 0 or tiny for a passing campaign.
    """

    def __init__(self, name: str, count: int, passed: int,
                 worst_residual: float):
        self.name = name
        self.count = int(count)
        self.passed = int(passed)
        self.worst_residual = float(worst_residual)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.count

    def __repr__(self):
        return (f"{self.name}: {self.passed}/{self.count} "
                f"worst residual {self.worst_residual:.3e}")

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "name": self.name,
                "count": self.count,
                "pass": self.passed,
                "worst_residual": self.worst_residual}

    @classmethod
    def from_dict(cls, d: dict):
        return cls(d["name"], d["count"], d["pass"], d["worst_residual"])


class AuditReport(MSONable):
    def __init__(self, campaigns: List[CampaignResult], seed: int):
        self.campaigns = campaigns
        self.seed = int(seed)

    @property
    def all_passed(self) -> bool:
        return all(c.all_passed for c in self.campaigns)

    def __repr__(self):
        lines = [f"seed: {self.seed}"] + [repr(c) for c in self.campaigns]
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"@module": self.__class__.__module__,
                "@class": self.__class__.__name__,
                "campaigns": [c.as_dict() for c in self.campaigns],
                "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict):
        return cls([c if isinstance(c, CampaignResult)
                    else CampaignResult.from_dict(c) for c in d["campaigns"]],
                   d["seed"])

    @classmethod
    def load_json(cls, filename="audit.json"):
        return loadfn(filename)

    def to_json_file(self, filename="audit.json"):
        with open(filename, "w") as fw:
            json.dump(self.as_dict(), fw, indent=2, cls=MontyEncoder)


def _point_diff(x: Point3, y: Point3) -> float:
    return float(np.max(np.abs(x.as_array() - y.as_array())))


def contraction_campaign(cfg: SamplerConfig, tol: Tolerances
                         ) -> CampaignResult:
    """pi of strict contractions lands in the closed pentablock. """
    rng = cfg.generator(0)
    passed, worst = 0, 0.0
    for _ in range(cfg.count):
        x = pi_map(sample_contraction(rng, cfg.contraction_margin))
        passed += in_closed_penta(x, tol)
        worst = max(worst, penta_sup(x, tol) - 1)
    return CampaignResult("contraction->closed_penta", cfg.count, passed,
                          worst)


def unitary_campaign(cfg: SamplerConfig, tol: Tolerances) -> CampaignResult:
    """pi of Haar unitaries lands in K1. """
    rng = cfg.generator(1)
    passed, worst = 0, 0.0
    for _ in range(cfg.count):
        x = pi_map(sample_unitary(rng))
        passed += in_K1(x, tol)
        worst = max(worst, k1_residual(x))
    return CampaignResult("unitary->K1", cfg.count, passed, worst)


def lift_campaign(cfg: SamplerConfig, tol: Tolerances) -> CampaignResult:
    """project(lift(x)) = x for sampled K0 points. """
    rng = cfg.generator(2)
    passed, worst = 0, 0.0
    for _ in range(cfg.count):
        x = sample_k0_point(rng)
        try:
            residual = _point_diff(
                x, project_from_unitary(lift_to_unitary(x, tol), tol))
        except PypentaError as e:
            logger.warning(f"Lift round trip of {x} failed: {e}")
            residual = float("inf")
        passed += residual <= tol.boundary_tol
        worst = max(worst, residual)
    return CampaignResult("K0->lift->project", cfg.count, passed, worst)


def equal_diagonal_campaign(cfg: SamplerConfig,
                            tol: Tolerances,
                            k0_predicate: K0Predicate = in_K0
                            ) -> CampaignResult:
    """Unitaries with equal diagonal project into K0 and lift back. """
    rng = cfg.generator(3)
    passed, worst = 0, 0.0
    for _ in range(cfg.count):
        x = sample_k0_point(rng)
        try:
            u = lift_to_unitary(x, tol)
            y = project_from_unitary(u, tol)
            relifted = lift_to_unitary(y, tol)
            residual = max(
                max(k0_residuals(y).values()),
                float(np.max(np.abs(relifted.as_array() - u.as_array()))))
        except PypentaError as e:
            logger.warning(f"Equal diagonal round trip of {x} failed: {e}")
            worst = float("inf")
            continue
        passed += k0_predicate(y, tol) and residual <= tol.boundary_tol
        worst = max(worst, residual)
    return CampaignResult("equal_diagonal->project->K0", cfg.count, passed,
                          worst)


def audit(cfg: Optional[SamplerConfig] = None,
          tol: Optional[Tolerances] = None,
          k0_predicate: K0Predicate = in_K0) -> AuditReport:
    """Run the four cross-checks against the matrix-image definitions.

    Args:
        cfg (SamplerConfig):
            Seed, sample count and contraction margin.
        tol (Tolerances):
            Tolerances handed to every predicate.
        k0_predicate (Callable):
            K0 test of the last campaign. Replaced only for negative controls.

    Returns:
        AuditReport. Failures are data in the report and never raised.
    """
    cfg = cfg or SamplerConfig()
    tol = tol or Tolerances()
    campaigns = [contraction_campaign(cfg, tol),
                 unitary_campaign(cfg, tol),
                 lift_campaign(cfg, tol),
                 equal_diagonal_campaign(cfg, tol, k0_predicate)]
    for c in campaigns:
        logger.info(repr(c))
    return AuditReport(campaigns, cfg.seed)
