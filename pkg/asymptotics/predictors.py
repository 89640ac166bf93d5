# -*- coding: utf-8 -*-
"""
Long-time predictors of eps_j^n zone by zone: near wall (n^{-3/2}), transition
(n^{-1/2}), front (Airy, n^{-1/3}) and the dissipative Gaussian peak. Unstable boundaries
with a simple determinant zero at z = -1 add the bounded sawtooth (-1)^n R.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from scipy import stats

from config import numerics_config
from errors import ValidationError
from schemes.model import BoundaryScheme, BulkKind, BulkScheme
from special_fn.airy import airy_ai, airy_primitive
from symbols.boundary_fn import det_minus_one, det_plus_one, residue_R
from symbols.branch import leapfrog_branch_angle
from symbols.phase import Zone, transition_angles, transition_sigma

_logger = logging.getLogger(__name__)

STABLE = "stable"
UNSTABLE = "unstable"


@dataclass
class Prediction:
    zone: Zone
    n: int
    j: int
    value: float
    scale_exponent: float
    diagnostics: Dict[str, object] = field(default_factory=dict)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _check_mode(mode: str) -> str:
    mode = (mode or STABLE).lower()
    if mode not in (STABLE, UNSTABLE):
        raise ValidationError("mode must be 'stable' or 'unstable' (got %r)" % (mode,))
    return mode


def _require_leapfrog(bulk: BulkScheme) -> float:
    if bulk.kind != BulkKind.LEAP_FROG:
        raise ValidationError("this predictor needs the leap-frog bulk")
    return bulk.c


def is_upwind(boundary: BoundaryScheme, courant: float) -> bool:
    tol = numerics_config.get_coefficient_tolerance()
    if boundary.bt or len(boundary.b) != 2:
        return False
    return abs(float(boundary.b[0]) - (1.0 + courant)) <= tol and abs(float(boundary.b[1]) + courant) <= tol


def _phase_sum(values, step: float, weight: bool = False) -> complex:
    """sum_k (k) v_k e^{-i k step}."""
    total = 0j
    for k, v in enumerate(values):
        term = float(v) * cmath.exp(-1j * k * step)
        total += k * term if weight else term
    return total


def _alt_phase_sum(values, xi: float) -> complex:
    """sum_k (-1)^k v_k e^{-i k xi}."""
    return sum(_sign(k) * float(v) * cmath.exp(-1j * k * xi) for k, v in enumerate(values))


def near_wall_coefficients(boundary: BoundaryScheme, theta: float) -> Dict[str, complex]:
    """G^0_+(theta), G^1_+(theta), G^0_-(-theta), G^1_-(-theta)."""
    quarter = math.pi / 2
    b0 = _phase_sum(boundary.b, quarter)
    bt0 = _phase_sum(boundary.bt, quarter)
    b1 = _phase_sum(boundary.b, quarter, weight=True)
    bt1 = _phase_sum(boundary.bt, quarter, weight=True)
    e1 = cmath.exp(1j * theta)
    e2 = cmath.exp(2j * theta)
    return {
        "G0_plus": e1 * b0 + e2 * bt0,
        "G1_plus": e1 * b1 + e2 * bt1,
        "G0_minus": e1.conjugate() * b0 - e2.conjugate() * bt0,
        "G1_minus": e1.conjugate() * b1 - e2.conjugate() * bt1,
    }


def _residue_term(boundary: BoundaryScheme, c: float, n: int, mode: str) -> Tuple[float, Optional[float]]:
    if mode != UNSTABLE:
        return 0.0, None
    r = residue_R(boundary, c).r
    return _sign(n) * r, r


def near_wall_stable_value(boundary: BoundaryScheme, c: float, n: int, j: int) -> Tuple[float, Dict[str, complex]]:
    theta = leapfrog_branch_angle(c)
    g = near_wall_coefficients(boundary, theta)
    amp = math.sqrt(2.0 / (math.pi * abs(c))) * (1.0 - c * c) ** 0.25
    plus = 1.0 - g["G0_plus"]
    minus = 1.0 + g["G0_minus"]
    if abs(plus) < 1e-14 or abs(minus) < 1e-14:
        raise ValidationError("near-wall denominators vanish: boundary violates the stability assumption")
    first = cmath.exp(1j * ((1 - n) * theta + (1 - j) * math.pi / 2 - math.pi / 4)) / plus
    first *= g["G1_plus"] / plus + j
    second = cmath.exp(1j * ((n - 1) * theta + (1 - j) * math.pi / 2 + math.pi / 4)) / minus
    second *= -g["G1_minus"] / minus + j
    value = amp * (first.real + _sign(n) * second.real) * n ** -1.5
    return value, g


def near_wall_upwind_value(c: float, n: int, j: int) -> float:
    """The upwind specialisation of the near-wall expansion."""
    theta = leapfrog_branch_angle(c)
    a = math.sqrt(1.0 - c)
    b = math.sqrt(1.0 + c)
    amp = math.sqrt(2.0 / (math.pi * abs(c))) * (1.0 - c * c) ** 0.25
    phase = n * theta + j * math.pi / 2 - math.pi / 4
    alt = _sign(n + j - 1)
    sine = (c / (1.0 + c)) * (1.0 / (a - b) ** 2 + alt / (a + b) ** 2) * math.sin(phase)
    cosine = (j / b) * (1.0 / (a - b) + alt / (a + b)) * math.cos(phase)
    return amp * (sine + cosine) * n ** -1.5


def predict_near_wall(boundary: BoundaryScheme, bulk: BulkScheme, n: int, j: int, mode: str = STABLE) -> Prediction:
    c = _require_leapfrog(bulk)
    mode = _check_mode(mode)
    if n < 10 or j < 0:
        raise ValidationError("near-wall predictor needs n >= 10 and j >= 0")
    tau, g = near_wall_stable_value(boundary, c, n, j)
    lead, r = _residue_term(boundary, c, n, mode)
    diag: Dict[str, object] = dict(g)
    diag["tau"] = tau
    diag["R"] = r
    diag["offset"] = j + c * n
    if is_upwind(boundary, c):
        diag["upwind_value"] = near_wall_upwind_value(c, n, j)
    return Prediction(
        zone=Zone.NEAR_WALL,
        n=n,
        j=j,
        value=lead + tau,
        scale_exponent=0.0 if mode == UNSTABLE else -1.5,
        diagnostics=diag,
    )


def transition_coefficients(boundary: BoundaryScheme, theta: float, xi: float) -> Tuple[complex, complex]:
    """(G_R, G_L) at (theta_SP, xi_SP)."""
    e = cmath.exp(1j * theta)
    gr = e - _alt_phase_sum(boundary.b, xi) - e.conjugate() * _alt_phase_sum(boundary.bt, xi)
    gl = e + _phase_sum(boundary.b, xi) - e.conjugate() * _phase_sum(boundary.bt, xi)
    return gr, gl


def transition_envelopes(c: float, nu: float, sigma: complex, n: int) -> Tuple[float, float]:
    """Magnitudes of the two self-similar envelopes of the upwind transition profile."""
    amp = math.sqrt(2.0 / (math.pi * abs(sigma))) * n ** -0.5
    first = amp / (nu - c) * math.sqrt((1.0 - nu * nu) * (1.0 - c) / (1.0 + c))
    second = amp * (1.0 - nu) / (nu - c)
    return abs(first), abs(second)


def transition_upwind_value(c: float, n: int, j: int) -> float:
    nu = j / n
    theta, xi = transition_angles(c, nu)
    sigma = transition_sigma(c, nu)
    s = math.sqrt((1.0 - c * c) * (1.0 + nu) / (1.0 - nu))
    phase = (n - 1) * theta - j * xi - 0.5 * cmath.phase(sigma)
    bracket = _sign(j) / (-(1.0 + c) + s) - _sign(n) / ((1.0 + c) + s)
    return math.sqrt(2.0 / (math.pi * abs(sigma))) * bracket * math.cos(phase) * n ** -0.5


def predict_transition(boundary: BoundaryScheme, bulk: BulkScheme, n: int, j: int, mode: str = STABLE) -> Prediction:
    c = _require_leapfrog(bulk)
    mode = _check_mode(mode)
    if n < 1:
        raise ValidationError("n must be positive")
    nu = j / n
    margin = numerics_config.get_transition_margin()
    if not (margin <= nu <= abs(c) - margin):
        raise ValidationError("transition predictor needs nu = j/n in (0, |C|) away from the ends (nu = %.6g)" % nu)
    theta, xi = transition_angles(c, nu)
    sigma = transition_sigma(c, nu)
    gr, gl = transition_coefficients(boundary, theta, xi)
    phase = (n - 1) * theta - j * xi - 0.5 * cmath.phase(sigma)
    gr2 = abs(gr) ** 2
    gl2 = abs(gl) ** 2
    if gr2 < 1e-28 or gl2 < 1e-28:
        raise ValidationError("G_R or G_L vanishes at nu = %.6g" % nu)
    cos_part = (gr.real / gr2) * _sign(j) - (gl.real / gl2) * _sign(n)
    sin_part = (gr.imag / gr2) * _sign(j) - (gl.imag / gl2) * _sign(n)
    tau = math.sqrt(2.0 / (math.pi * abs(sigma))) * (math.cos(phase) * cos_part + math.sin(phase) * sin_part) * n ** -0.5
    lead, r = _residue_term(boundary, c, n, mode)
    diag: Dict[str, object] = {
        "GR": gr,
        "GL": gl,
        "sigma": sigma,
        "theta_sp": theta,
        "xi_sp": xi,
        "tau": tau,
        "R": r,
        "offset": j + c * n,
    }
    if is_upwind(boundary, c):
        diag["upwind_value"] = transition_upwind_value(c, n, j)
        diag["envelope"] = transition_envelopes(c, nu, sigma, n)
    return Prediction(
        zone=Zone.TRANSITION,
        n=n,
        j=j,
        value=lead + tau,
        scale_exponent=0.0 if mode == UNSTABLE else -0.5,
        diagnostics=diag,
    )


def front_scale(c: float, n: int) -> float:
    """w = ((C/2)(C^2 - 1) n)^{1/3}, real and positive for -1 < C < 0."""
    w3 = 0.5 * c * (c * c - 1.0) * n
    if w3 <= 0.0:
        raise ValidationError("front scale is not real and positive (C = %s)" % c)
    return w3 ** (1.0 / 3.0)


def predict_front(boundary: BoundaryScheme, bulk: BulkScheme, n: int, j: int, mode: str = STABLE) -> Prediction:
    c = _require_leapfrog(bulk)
    mode = _check_mode(mode)
    if n < 1:
        raise ValidationError("n must be positive")
    delta = j + c * n
    halfwidth = numerics_config.get_front_halfwidth()
    if abs(delta) > halfwidth * n ** (1.0 / 3.0):
        raise ValidationError("front predictor needs |j + C n| <= %g n^(1/3) (offset %.6g)" % (halfwidth, delta))
    w = front_scale(c, n)
    x = delta / w
    diag: Dict[str, object] = {"offset": delta, "scale": w, "argument": x}
    if mode == UNSTABLE:
        r = residue_R(boundary, c).r
        value = _sign(n) * r * (1.0 / 3.0 - airy_primitive(x))
        diag["R"] = r
        return Prediction(zone=Zone.FRONT, n=n, j=j, value=value, scale_exponent=0.0, diagnostics=diag)
    d_minus = det_minus_one(boundary)
    d_plus = det_plus_one(boundary)
    if abs(d_minus) < 1e-14 or abs(d_plus) < 1e-14:
        raise ValidationError("D(+-1) vanishes: use the unstable mode")
    bracket = c * (_sign(n) / d_minus - _sign(j) / d_plus)
    diag.update({"D_minus_one": d_minus, "D_plus_one": d_plus, "bracket": bracket})
    value = bracket * airy_ai(x) / w
    return Prediction(zone=Zone.FRONT, n=n, j=j, value=value, scale_exponent=-1.0 / 3.0, diagnostics=diag)


def gaussian_variance(bulk: BulkScheme, n: int) -> float:
    c = bulk.c
    if bulk.kind == BulkKind.DISSIPATIVE:
        return 2.0 * n * (1.0 / bulk.w - 0.5) * (1.0 - c * c)
    if bulk.kind == BulkKind.MANUFACTURED:
        return (n - 2) * c * (1.0 - c)
    raise ValidationError("Gaussian peak needs a dissipative bulk")


def predict_gaussian(boundary: BoundaryScheme, bulk: BulkScheme, n: int, j: int, window: float = 10.0) -> Prediction:
    c = bulk.c
    if bulk.kind == BulkKind.LEAP_FROG:
        raise ValidationError("Gaussian peak needs a dissipative bulk")
    if bulk.kind == BulkKind.DISSIPATIVE and not (0.0 < bulk.w < 2.0):
        raise ValidationError("omega must lie in (0, 2)")
    if n < 3:
        raise ValidationError("n must be at least 3")
    var = gaussian_variance(bulk, n)
    if bulk.kind == BulkKind.MANUFACTURED:
        if not boundary.is_dirichlet():
            raise ValidationError("the manufactured Gaussian is only available with the Dirichlet boundary")
        mean = c * (n - 2)
        value = c * float(stats.norm.pdf(j - 1, loc=mean, scale=math.sqrt(var)))
        diag = {"mean": mean + 1, "variance": var, "bracket": c}
    else:
        mean = c * n
        if abs(j - mean) > window * math.sqrt(n):
            raise ValidationError("Gaussian predictor needs |j - C n| <= %g sqrt(n)" % window)
        total = boundary.sum_b() + boundary.sum_bt()
        alt = boundary.sum_k("b", alternating=True) - boundary.sum_k("bt", alternating=True)
        if abs(1.0 - total) < 1e-14 or abs(1.0 + alt) < 1e-14:
            raise ValidationError("Gaussian bracket denominators vanish")
        bracket = c * (1.0 / (1.0 - total) - _sign(n + j) / (1.0 + alt))
        value = bracket * float(stats.norm.pdf(j, loc=mean, scale=math.sqrt(var)))
        diag = {"mean": mean, "variance": var, "bracket": bracket}
    return Prediction(zone=Zone.GAUSSIAN_PEAK, n=n, j=j, value=value, scale_exponent=-0.5, diagnostics=diag)


def zone_of(bulk: BulkScheme, n: int, j: int) -> Zone:
    """Zone whose predictor applies at (n, j)."""
    if bulk.kind != BulkKind.LEAP_FROG:
        return Zone.GAUSSIAN_PEAK
    c = bulk.c
    if abs(j + c * n) <= numerics_config.get_front_halfwidth() * n ** (1.0 / 3.0):
        return Zone.FRONT
    nu = j / n
    margin = numerics_config.get_transition_margin()
    if nu < margin or j <= numerics_config.get_near_wall_max_j():
        return Zone.NEAR_WALL
    if nu <= abs(c) - margin:
        return Zone.TRANSITION
    return Zone.AHEAD


def predict(boundary: BoundaryScheme, bulk: BulkScheme, n: int, j: int, mode: str = STABLE, zone: Optional[Zone] = None) -> Prediction:
    zone = zone or zone_of(bulk, n, j)
    if zone == Zone.NEAR_WALL:
        return predict_near_wall(boundary, bulk, n, j, mode)
    if zone == Zone.TRANSITION:
        return predict_transition(boundary, bulk, n, j, mode)
    if zone == Zone.FRONT:
        return predict_front(boundary, bulk, n, j, mode)
    if zone == Zone.GAUSSIAN_PEAK:
        return predict_gaussian(boundary, bulk, n, j)
    raise ValidationError("no predictor ahead of the front (exponentially small)")
