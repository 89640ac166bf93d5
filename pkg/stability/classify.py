# -*- coding: utf-8 -*-
"""
Stability verdict of a boundary scheme for a given bulk: zeros of the boundary
determinant D in the closed exterior of the unit disk.

D is analytic outside the circle with D ~ z^2 at infinity, so the zeros strictly outside
|z| = 1 + delta number 2 - W, W the winding number of D along that circle. Unit-circle
zeros come from a modulus scan refined by bounded minimisation, plus the analytic
identities at z = -1 and z = +1.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar, root

from config import numerics_config
from errors import ValidationError
from schemes.model import BoundaryScheme, BulkKind, BulkScheme
from symbols.boundary_fn import (
    boundary_determinant,
    check_simple_zero_minus_one,
    det_plus_one,
)
from symbols.phase import transition_angles

_logger = logging.getLogger(__name__)

# Zeros closer than this are merged.
_MERGE = 1e-6


class Verdict(str, Enum):
    STABLE = "Stable"
    UNSTABLE_SIMPLE_ZERO = "UnstableSimpleZero"
    UNSTABLE_UNIT_CIRCLE_ZEROS = "UnstableUnitCircleZeros"
    GODUNOV_RYABENKII = "GodunovRyabenkii"
    INDETERMINATE = "Indeterminate"


@dataclass
class StabilityVerdict:
    verdict: Verdict
    zeros: List[complex] = field(default_factory=list)
    multiplicities: List[int] = field(default_factory=list)
    min_abs_d: float = float("nan")
    winding: Optional[int] = None
    grid: int = 0

    def to_json(self) -> Dict[str, object]:
        return {
            "class": self.verdict.value,
            "zeros": [
                {"re": float(z.real), "im": float(z.imag), "multiplicity": int(m)}
                for z, m in zip(self.zeros, self.multiplicities)
            ],
            "min_abs_D": self.min_abs_d,
            "winding": self.winding,
        }


def _circle(radius: float, n: int) -> np.ndarray:
    return radius * np.exp(2j * np.pi * np.arange(n) / n)


def winding_number(boundary: BoundaryScheme, bulk: BulkScheme, radius: float, grid: int, max_grid: int) -> Tuple[Optional[int], int]:
    """Winding of D along |z| = radius; (None, grid) when a phase jump stays above pi/2."""
    n = grid
    while True:
        d = boundary_determinant(boundary, bulk, _circle(radius, n))
        if np.any(d == 0):
            raise ValidationError("boundary determinant vanishes on the winding circle |z| = %g" % radius)
        steps = np.angle(np.roll(d, -1) / d)
        if np.max(np.abs(steps)) <= math.pi / 2:
            total = float(np.sum(steps)) / (2.0 * math.pi)
            w = int(round(total))
            if abs(total - w) > 1e-6:
                _logger.warning("winding sum %.9f not integral at grid %d", total, n)
            return w, n
        if n >= max_grid:
            _logger.warning("winding of D unresolved at grid %d (radius %g)", n, radius)
            return None, n
        n *= 2
        _logger.info("phase jump above pi/2; doubling winding grid to %d", n)


def _locate_outside_zeros(boundary: BoundaryScheme, bulk: BulkScheme, radius: float, count: int) -> List[complex]:
    bound = 1.0 + sum(abs(float(x)) for x in boundary.b) + sum(abs(float(x)) for x in boundary.bt)
    r_max = max(bound, radius) + 1.0

    def residual(v):
        z = complex(v[0], v[1])
        if abs(z) < radius:
            z = z * radius / abs(z) if z != 0 else complex(radius)
        d = boundary_determinant(boundary, bulk, z)
        return [d.real, d.imag]

    found: List[complex] = []
    for r in np.linspace(radius + 1e-3, r_max, 8):
        for phi in np.linspace(0.0, 2.0 * math.pi, 32, endpoint=False):
            sol = root(residual, [r * math.cos(phi), r * math.sin(phi)], method="hybr")
            if not sol.success:
                continue
            z = complex(sol.x[0], sol.x[1])
            if abs(z) <= radius or abs(boundary_determinant(boundary, bulk, z)) > 1e-9:
                continue
            if all(abs(z - w) > _MERGE for w in found):
                found.append(z)
            if len(found) >= count:
                return found
    _logger.warning("located %d of %d exterior zeros", len(found), count)
    return found


def _abs_d_on_circle(boundary: BoundaryScheme, bulk: BulkScheme, theta: float) -> float:
    return abs(boundary_determinant(boundary, bulk, cmath.exp(1j * theta)))


def _multiplicity(boundary: BoundaryScheme, bulk: BulkScheme, theta: float) -> int:
    """Vanishing order of |D| along the circle from a two-step log-log slope."""
    h1, h2 = 1e-3, 1e-4
    d1 = 0.5 * (_abs_d_on_circle(boundary, bulk, theta + h1) + _abs_d_on_circle(boundary, bulk, theta - h1))
    d2 = 0.5 * (_abs_d_on_circle(boundary, bulk, theta + h2) + _abs_d_on_circle(boundary, bulk, theta - h2))
    if d1 <= 0.0 or d2 <= 0.0:
        return 1
    slope = math.log(d1 / d2) / math.log(h1 / h2)
    return max(1, int(round(slope)))


def unit_circle_zeros(boundary: BoundaryScheme, bulk: BulkScheme, grid: int) -> Tuple[List[Tuple[complex, int]], float]:
    """Refined |D| minima on the unit circle below the zero threshold; also min |D| seen."""
    threshold = numerics_config.get_unit_zero_threshold()
    theta = 2.0 * np.pi * np.arange(grid) / grid
    mod = np.abs(boundary_determinant(boundary, bulk, np.exp(1j * theta)))
    min_seen = float(np.min(mod))
    left = np.roll(mod, 1)
    right = np.roll(mod, -1)
    candidates = np.flatnonzero((mod <= left) & (mod <= right))
    # keep the deepest minima; a smooth |D| has few of them
    candidates = candidates[np.argsort(mod[candidates])][:64]
    step = 2.0 * math.pi / grid
    zeros: List[Tuple[complex, int]] = []
    for k in candidates:
        t0 = float(theta[k])
        best_t, best_v = t0, float(mod[k])
        if best_v > threshold:
            res = minimize_scalar(
                lambda t: _abs_d_on_circle(boundary, bulk, t),
                bounds=(t0 - step, t0 + step),
                method="bounded",
                options={"xatol": 1e-13},
            )
            if res.fun < best_v:
                best_t, best_v = float(res.x), float(res.fun)
        min_seen = min(min_seen, best_v)
        if best_v >= threshold:
            continue
        z = cmath.exp(1j * best_t)
        if any(abs(z - w) <= _MERGE * 10 for w, _ in zeros):
            continue
        zeros.append((z, _multiplicity(boundary, bulk, best_t)))
    return zeros, min_seen


def _analytic_real_zeros(boundary: BoundaryScheme, bulk: BulkScheme) -> List[Tuple[complex, int]]:
    if bulk.kind != BulkKind.LEAP_FROG:
        return []
    tol = numerics_config.get_coefficient_tolerance()
    out: List[Tuple[complex, int]] = []
    first, second = check_simple_zero_minus_one(boundary, bulk.courant)
    if first:
        out.append((-1 + 0j, 1 if second else _multiplicity(boundary, bulk, math.pi)))
    if abs(det_plus_one(boundary)) <= tol:
        out.append((1 + 0j, _multiplicity(boundary, bulk, 0.0)))
    return out


def classify(
    boundary: BoundaryScheme,
    bulk: BulkScheme,
    delta: Optional[float] = None,
    grid: Optional[int] = None,
) -> StabilityVerdict:
    delta = numerics_config.get_stability_delta() if delta is None else float(delta)
    grid = numerics_config.get_stability_grid() if grid is None else int(grid)
    if delta <= 0.0 or grid < 8:
        raise ValidationError("classify needs delta > 0 and grid >= 8")
    max_grid = max(grid, numerics_config.get_stability_max_grid())

    w, used = winding_number(boundary, bulk, 1.0 + delta, grid, max_grid)
    if w is None:
        return StabilityVerdict(verdict=Verdict.INDETERMINATE, grid=used)
    outside = 2 - w
    if outside > 0:
        zs = _locate_outside_zeros(boundary, bulk, 1.0 + delta, outside)
        _logger.info("Godunov-Ryabenkii: %d exterior zeros", outside)
        return StabilityVerdict(
            verdict=Verdict.GODUNOV_RYABENKII,
            zeros=zs,
            multiplicities=[1] * len(zs),
            winding=w,
            grid=used,
        )
    if outside < 0:
        _logger.warning("negative exterior zero count %d: winding %d", outside, w)
        return StabilityVerdict(verdict=Verdict.INDETERMINATE, winding=w, grid=used)

    found, min_abs = unit_circle_zeros(boundary, bulk, used)
    for z, m in _analytic_real_zeros(boundary, bulk):
        match = [i for i, (w0, _) in enumerate(found) if abs(w0 - z) <= 1e-5]
        if match:
            found[match[0]] = (z, m)
        else:
            found.append((z, m))
    found.sort(key=lambda item: (round(cmath.phase(item[0]), 9)))
    zeros = [z for z, _ in found]
    mults = [m for _, m in found]

    if not zeros:
        verdict = Verdict.STABLE
    elif len(zeros) == 1 and mults[0] == 1 and abs(abs(zeros[0].real) - 1.0) < 1e-6:
        verdict = Verdict.UNSTABLE_SIMPLE_ZERO
    else:
        verdict = Verdict.UNSTABLE_UNIT_CIRCLE_ZEROS
    return StabilityVerdict(
        verdict=verdict,
        zeros=zeros,
        multiplicities=mults,
        min_abs_d=min_abs,
        winding=w,
        grid=used,
    )


def expected_unit_zeros(courant: float, nu_bar: float) -> List[complex]:
    """e^{+-i theta_SP(nu_bar)}: where the glancing-instability boundary vanishes."""
    theta, _ = transition_angles(courant, nu_bar)
    e = cmath.exp(1j * theta)
    return [e, e.conjugate()]
