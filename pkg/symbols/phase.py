# -*- coding: utf-8 -*-
"""
Phase f(z; nu) = log z + nu log kappa_s(z), its derivatives, and the saddle-point map
nu -> SaddlePointSet with zone classification.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from errors import ValidationError
from schemes.model import BulkKind, BulkScheme
from symbols.roots import all_roots, kappa_derivatives, kappa_s

_logger = logging.getLogger(__name__)

# nu within this distance of |C| is treated as the front.
FRONT_TOLERANCE = 1e-12


class Zone(str, Enum):
    NEAR_WALL = "NearWall"
    TRANSITION = "Transition"
    FRONT = "Front"
    AHEAD = "AheadOfFront"
    GAUSSIAN_PEAK = "GaussianPeak"
    DAMPED = "Damped"


@dataclass
class PhaseEval:
    f: complex
    f1: complex
    f2: complex
    kappa: complex


@dataclass
class SaddlePointSet:
    nu: float
    zone: Zone
    theta_sp: float = float("nan")
    xi_sp: float = float("nan")
    points: List[complex] = field(default_factory=list)
    kappa_at_points: List[complex] = field(default_factory=list)
    second_derivative: complex = 0j
    degenerate: bool = False

    def to_record(self) -> Dict[str, object]:
        return {
            "nu": self.nu,
            "zone": self.zone.value,
            "theta_sp": self.theta_sp,
            "xi_sp": self.xi_sp,
            "sigma_re": float(np.real(self.second_derivative)),
            "sigma_im": float(np.imag(self.second_derivative)),
        }


def f_eval(bulk: BulkScheme, z: complex, nu: float, kappa: Optional[complex] = None) -> PhaseEval:
    """f, f' and f'' at z along kappa (kappa_s by default); principal logarithms."""
    z = complex(z)
    if z == 0:
        raise ValidationError("f is undefined at z = 0")
    k, k1, k2 = kappa_derivatives(bulk, z, kappa)
    if k == 0:
        raise ValidationError("f is undefined where kappa vanishes")
    f = cmath.log(z) + nu * cmath.log(k)
    f1 = 1.0 / z + nu * k1 / k
    f2 = -1.0 / (z * z) + nu * (k2 * k - k1 * k1) / (k * k)
    return PhaseEval(f=f, f1=f1, f2=f2, kappa=k)


def transition_angles(courant: float, nu: float) -> Tuple[float, float]:
    """(theta_SP, xi_SP) for 0 < nu < |C|; kappa_s(e^{i theta_SP}) = -e^{-i xi_SP}."""
    c2 = courant * courant
    theta = 0.5 * math.acos(_clip((1.0 + nu * nu - 2.0 * c2) / (1.0 - nu * nu)))
    xi = math.acos(_clip(-(nu / courant) * math.sqrt((1.0 - c2) / (1.0 - nu * nu))))
    return theta, xi


def transition_sigma(courant: float, nu: float) -> complex:
    """Closed-form f''(e^{i theta_SP}; nu) in the transition zone."""
    theta, xi = transition_angles(courant, nu)
    c2 = courant * courant
    q32 = ((1.0 - c2) / (1.0 - nu * nu)) ** 1.5

    def e(k: int) -> complex:
        return cmath.exp(1j * k * theta)

    bracket = (
        (2.0 * c2 - 1.0) * e(6)
        + 3.0 * e(4)
        + 3.0 * (2.0 * c2 - 1.0) * e(2)
        + 1.0
        + 8.0 * nu ** 3 * e(3) * q32
    )
    return -(1.0 + 1.0 / nu) * e(-2) - cmath.exp(1j * (xi - 6.0 * theta)) * bracket / (8.0 * courant * nu * nu * q32)


def ahead_saddle_squares(courant: float, nu: float) -> Tuple[float, float]:
    """The two values of z^2 (product 1) for |C| < nu < 1; the first lies inside the disk."""
    c2 = courant * courant
    root = 2.0 * math.sqrt((c2 - 1.0) * (c2 - nu * nu))
    base = 2.0 * c2 - nu * nu - 1.0
    den = nu * nu - 1.0
    return (base + root) / den, (base - root) / den


def _clip(x: float) -> float:
    return max(-1.0, min(1.0, x))


def _best_root(bulk: BulkScheme, z: complex, nu: float) -> Tuple[complex, complex]:
    r1, r2 = all_roots(bulk, z)
    best = None
    for k in (complex(r1), complex(r2)):
        if not np.isfinite(k) or k == 0:
            continue
        try:
            ev = f_eval(bulk, z, nu, kappa=k)
        except ValidationError:
            continue
        if best is None or abs(ev.f1) < abs(best[1]):
            best = (k, ev.f1, ev.f2)
    if best is None:
        raise ValidationError("no admissible root at z = %r" % (z,))
    return best[0], best[2]


def _check_nu(nu: float) -> float:
    nu = float(nu)
    if not (0.0 <= nu <= 1.0):
        raise ValidationError("nu must lie in [0, 1] (got %s)" % (nu,))
    return nu


def saddle_points(bulk: BulkScheme, nu: float) -> SaddlePointSet:
    nu = _check_nu(nu)
    if bulk.kind != BulkKind.LEAP_FROG:
        return _dissipative_saddles(bulk, nu)
    c = bulk.c
    ac = abs(c)
    if nu == 0.0:
        return SaddlePointSet(nu=nu, zone=Zone.NEAR_WALL)
    if abs(nu - ac) <= FRONT_TOLERANCE:
        return SaddlePointSet(
            nu=nu,
            zone=Zone.FRONT,
            theta_sp=0.0,
            xi_sp=math.pi if c < 0 else 0.0,
            points=[1 + 0j, -1 + 0j],
            kappa_at_points=[kappa_s(bulk, 1.0), kappa_s(bulk, -1.0)],
            second_derivative=0j,
            degenerate=True,
        )
    if nu < ac:
        theta, xi = transition_angles(c, nu)
        e = cmath.exp(1j * theta)
        points = [e, e.conjugate(), -e, -e.conjugate()]
        return SaddlePointSet(
            nu=nu,
            zone=Zone.TRANSITION,
            theta_sp=theta,
            xi_sp=xi,
            points=points,
            kappa_at_points=[kappa_s(bulk, z) for z in points],
            second_derivative=transition_sigma(c, nu),
        )
    if nu >= 1.0:
        return SaddlePointSet(nu=nu, zone=Zone.AHEAD, degenerate=True)
    points: List[complex] = []
    kappas: List[complex] = []
    sigma = 0j
    for square in ahead_saddle_squares(c, nu):
        r = math.sqrt(square)
        for z in (complex(r), complex(-r)):
            k, f2 = _best_root(bulk, z, nu)
            points.append(z)
            kappas.append(k)
            if z.real > 1.0:
                sigma = f2
    return SaddlePointSet(nu=nu, zone=Zone.AHEAD, points=points, kappa_at_points=kappas, second_derivative=sigma)


def _dissipative_saddles(bulk: BulkScheme, nu: float) -> SaddlePointSet:
    c = bulk.c
    if abs(nu - c) <= FRONT_TOLERANCE:
        points = [1 + 0j, -1 + 0j]
        if bulk.kind == BulkKind.DISSIPATIVE:
            sigma = complex((2.0 / (c * c)) * (1.0 / bulk.w - 0.5) * (1.0 - c * c))
        else:
            sigma = f_eval(bulk, 1.0, nu).f2
        return SaddlePointSet(
            nu=nu,
            zone=Zone.GAUSSIAN_PEAK,
            theta_sp=0.0,
            xi_sp=0.0,
            points=points,
            kappa_at_points=[kappa_s(bulk, z) for z in points],
            second_derivative=sigma,
        )
    return SaddlePointSet(nu=nu, zone=Zone.DAMPED)
