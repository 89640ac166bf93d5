# -*- coding: utf-8 -*-
"""
Long-time behaviour of the second Green function on the lattice: stationary-phase value
inside the light cone, Airy fronts at j = +-C n, the L^2 limit, real saddle points of
f_pm(xi; nu) = nu xi +- arcsin(C sin xi), and the logarithmic growth of sum_n |S_0^n|^2.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from scipy import special

from config import numerics_config
from errors import ValidationError
from schemes.model import BoundaryScheme, BulkKind, BulkScheme
from schemes.simulate import simulate_error
from special_fn.airy import airy_ai
from green.simulate import green_trace_series

_logger = logging.getLogger(__name__)

NU_MARGIN = 1e-3
_DEGENERATE = 1e-12


class Front(str, Enum):
    PHYSICAL = "Physical"
    SPURIOUS = "Spurious"

    @classmethod
    def parse(cls, text) -> "Front":
        if isinstance(text, Front):
            return text
        key = str(text).strip().lower()
        for front in cls:
            if key in (front.value.lower(), front.name.lower()):
                return front
        raise ValidationError("unknown front %r (Physical or Spurious)" % (text,))


@dataclass
class GreenSaddle:
    branch: str
    r: int
    xi: float
    f2: float

    @property
    def degenerate(self) -> bool:
        return abs(self.f2) <= _DEGENERATE


@dataclass
class TraceDivergence:
    n_max: int
    partial_sum: float
    fitted_log_coeff: float
    theoretical_log_coeff: float
    stated_log_coeff: float
    partial_sums: np.ndarray


def _check(courant: float) -> float:
    c = float(courant)
    if c == 0.0 or abs(c) >= 1.0:
        raise ValidationError("need 0 < |C| < 1 (got %s)" % courant)
    return c


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def green_transition_predict(courant: float, n: int, j: int) -> float:
    """Two-cosine stationary-phase value of S_j^n for |j| < |C| n."""
    c = _check(courant)
    if n < 1:
        raise ValidationError("n must be positive")
    nu = j / n
    if abs(nu) > abs(c) - NU_MARGIN:
        raise ValidationError("need |j/n| <= |C| - %g (j/n = %.6g)" % (NU_MARGIN, nu))
    r = j / (c * n)
    amp = (
        abs(c) ** -0.5
        * (1.0 - c * c) ** -0.25
        * (1.0 - r * r) ** -0.25
        * n ** -0.5
        / math.sqrt(2.0 * math.pi)
    )
    a = math.sqrt((1.0 - r * r) / (1.0 - nu * nu))
    b = r * math.sqrt((1.0 - c * c) / (1.0 - nu * nu))
    b = max(-1.0, min(1.0, b))
    base = n * math.asin(c * a)
    shift = 0.25 * math.pi * math.copysign(1.0, c)
    first = math.cos(base - j * math.acos(b) - shift)
    second = math.cos(base + j * math.acos(-b) - shift)
    return amp * (first - _sign(n) * second)


def green_trace_asymptotic(courant: float, n: int) -> float:
    return green_transition_predict(courant, n, 0)


def green_front_scale(courant: float, n: int) -> float:
    c = _check(courant)
    w3 = 0.5 * c * (c * c - 1.0) * n
    if w3 <= 0.0:
        raise ValidationError("front scale needs -1 < C < 0")
    return w3 ** (1.0 / 3.0)


def green_front_predict(courant: float, n: int, j: int, front) -> float:
    """Airy profile at the physical (j ~ C n) or spurious (j ~ -C n) front."""
    c = _check(courant)
    front = Front.parse(front)
    if n < 1:
        raise ValidationError("n must be positive")
    if c > 0.0:
        # S_j^n(C) = S_{-j}^n(-C)
        return green_front_predict(-c, n, -j, front)
    offset = j + c * n if front == Front.SPURIOUS else j - c * n
    halfwidth = numerics_config.get_front_halfwidth()
    if abs(offset) > halfwidth * n ** (1.0 / 3.0):
        raise ValidationError("front predictor needs |offset| <= %g n^(1/3) (offset %.6g)" % (halfwidth, offset))
    mask = abs(_sign(n) - _sign(j)) // 2
    if mask == 0:
        return 0.0
    w = green_front_scale(c, n)
    if front == Front.SPURIOUS:
        return -_sign(n) * airy_ai(offset / w) / w
    return airy_ai(-offset / w) / w


def green_l2_limit(courant: float) -> float:
    c = _check(courant)
    return 1.0 / (math.sqrt(2.0) * (1.0 - c * c) ** 0.25)


def green_energy_bound(courant: float) -> float:
    """Energy-method bound (1+|C|)/(1-|C|) on ||S^{2n}||^2 + ||S^{2n+1}||^2."""
    c = abs(_check(courant))
    return (1.0 + c) / (1.0 - c)


def green_phase_derivatives(courant: float, xi: float, nu: float) -> Tuple[float, float, float, float]:
    """(f+', f-', f+'', f-'') at xi."""
    c = _check(courant)
    s = math.sin(xi)
    root = math.sqrt(1.0 - (c * s) ** 2)
    d1 = c * math.cos(xi) / root
    d2 = -c * s * (1.0 - c * c) / root ** 3
    return nu + d1, nu - d1, d2, -d2


def green_saddle_points(courant: float, nu: float) -> List[GreenSaddle]:
    c = _check(courant)
    if abs(nu) > 1.0:
        raise ValidationError("|nu| must not exceed 1")
    if abs(nu) > abs(c) + _DEGENERATE:
        return []
    ratio = min(1.0, (nu * nu) / (c * c))
    width = math.sqrt((1.0 - c * c) / (1.0 - nu * nu))
    curvature = math.copysign(1.0, c) * (1.0 - nu * nu) * math.sqrt(max(0.0, c * c - nu * nu)) / math.sqrt(1.0 - c * c)
    out: List[GreenSaddle] = []
    for branch, pm in (("+", 1.0), ("-", -1.0)):
        arg = max(-1.0, min(1.0, -pm * (nu / c) * width))
        if ratio >= 1.0:
            arg = math.copysign(1.0, -pm * nu / c)
        for r in (0, 1):
            xi = (-1) ** r * math.acos(arg)
            f2 = -pm * (-1) ** r * curvature
            out.append(GreenSaddle(branch=branch, r=r, xi=xi, f2=f2))
    return out


def green_trace_exact(courant: float, n_max: int) -> np.ndarray:
    """S_0^n for n = 0..n_max: S_0^{2m+1} = P_m(1 - 2C^2), S_0^{2m} = 0."""
    c = _check(courant)
    out = np.zeros(int(n_max) + 1)
    odd = np.arange(1, int(n_max) + 1, 2)
    out[odd] = special.eval_legendre((odd - 1) // 2, 1.0 - 2.0 * c * c)
    return out


def derived_log_coeff(courant: float) -> float:
    c = abs(_check(courant))
    return 1.0 / (2.0 * math.pi * c * math.sqrt(1.0 - c * c))


def stated_log_coeff(courant: float) -> float:
    c = abs(_check(courant))
    return 1.0 / (math.pi * c * math.sqrt(1.0 - c * c))


def fit_log_coeff(partial_sums: np.ndarray, lo: Optional[int] = None) -> float:
    """Least-squares slope of partial_sums[n] against ln n over n in [N/10, N]."""
    n_max = len(partial_sums) - 1
    lo = max(1, n_max // 10) if lo is None else lo
    ns = np.arange(lo, n_max + 1)
    slope, _ = np.polyfit(np.log(ns), partial_sums[lo:], 1)
    return float(slope)


def trace_divergence(courant: float, n_max: int, method: str = "legendre") -> TraceDivergence:
    """Partial sums of sum_n |S_0^n|^2 and their fitted ln N coefficient."""
    if n_max < 1000:
        raise ValidationError("trace divergence needs N >= 1000")
    if method == "legendre":
        trace = green_trace_exact(courant, n_max)
    elif method == "simulate":
        trace = green_trace_series(courant, n_max)
    else:
        raise ValidationError("method must be 'legendre' or 'simulate'")
    sums = np.cumsum(trace ** 2)
    fitted = fit_log_coeff(sums)
    _logger.info("trace divergence C=%s N=%d fitted %.6g", courant, n_max, fitted)
    return TraceDivergence(
        n_max=int(n_max),
        partial_sum=float(sums[-1]),
        fitted_log_coeff=fitted,
        theoretical_log_coeff=derived_log_coeff(courant),
        stated_log_coeff=stated_log_coeff(courant),
        partial_sums=sums,
    )


def trace_companion_partial_sums(courant: float, n_max: int) -> Tuple[np.ndarray, float]:
    """Partial sums of (1 - (-1)^n) sin(2 n arcsin|C|), n = 1..N, and the bound 2/sin(2 arcsin|C|)."""
    a = math.asin(abs(_check(courant)))
    n = np.arange(1, int(n_max) + 1)
    terms = (1.0 - np.where(n % 2 == 1, -1.0, 1.0)) * np.sin(2.0 * n * a)
    return np.cumsum(terms), 2.0 / math.sin(2.0 * a)


def boundary_trace_sums(boundary: BoundaryScheme, courant, n_max: int) -> np.ndarray:
    """Partial sums of |eps_0^n|^2 with the boundary in place, n = 0..N."""
    bulk = BulkScheme(kind=BulkKind.LEAP_FROG, courant=courant)
    j_max = int(n_max) // 2 + boundary.width + 2
    run = simulate_error(bulk, boundary, n_max, j_max, truncate=True, snapshots=(), traces=(0,))
    return np.cumsum(np.asarray(run.traces[0], dtype=float) ** 2)
