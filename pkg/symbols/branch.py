# -*- coding: utf-8 -*-
"""Branch points of kappa_s: zeros of the discriminant of the bulk quadratic, in closed form."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from schemes.model import BulkKind, BulkScheme

_logger = logging.getLogger(__name__)


@dataclass
class BranchPointSet:
    angle: float
    points: List[complex] = field(default_factory=list)
    inside_disk: bool = False
    degenerate_quartic: bool = False
    removable: bool = False


def _biquadratic(b: float, c: float) -> List[complex]:
    """Roots of z^4 + b z^2 + c, ordered by argument."""
    u = np.roots([1.0, b, c]).astype(complex)
    zs = []
    for w in u:
        r = np.sqrt(complex(w))
        zs.extend([complex(r), complex(-r)])
    return sorted(zs, key=lambda z: (round(float(np.angle(z)), 12), abs(z)))


def leapfrog_branch_angle(courant: float) -> float:
    """theta_BP = arccos(1 - 2 C^2)/2 = arcsin |C|."""
    return 0.5 * math.acos(1.0 - 2.0 * courant * courant)


def branch_points(bulk: BulkScheme) -> BranchPointSet:
    c = bulk.c
    if bulk.kind == BulkKind.LEAP_FROG:
        theta = leapfrog_branch_angle(c)
        e = complex(math.cos(theta), math.sin(theta))
        return BranchPointSet(angle=theta, points=[e, e.conjugate(), -e.conjugate(), -e])
    if bulk.kind == BulkKind.DISSIPATIVE:
        w = bulk.w
        degenerate = abs(w * (1.0 + c) - 2.0) < 1e-12
        if degenerate:
            _logger.warning("dissipative bulk with omega = 2/(1+C): quadratic degenerates to linear")
        pts = _biquadratic((c * c - 1.0) * w * w + 2.0 * (w - 1.0), (w - 1.0) ** 2)
        positive = [abs(float(np.angle(z))) for z in pts if abs(z) > 0.0]
        angle = min(positive) if positive else 0.0
        return BranchPointSet(
            angle=angle,
            points=pts,
            inside_disk=all(abs(z) < 1.0 for z in pts),
            degenerate_quartic=degenerate,
        )
    # discriminant (z^2 - (1 - 2C))^2: double zeros, no branching
    r = np.sqrt(complex(1.0 - 2.0 * c))
    pts = [complex(r), complex(-r)]
    return BranchPointSet(
        angle=abs(float(np.angle(pts[0]))),
        points=pts,
        inside_disk=all(abs(z) < 1.0 for z in pts),
        removable=True,
    )
