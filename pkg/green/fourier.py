# -*- coding: utf-8 -*-
"""
Fourier side of the second Green function. With alpha = arcsin(C sin xi),

    S^n(xi) = (exp(-i n alpha) + (-1)^{n+1} exp(i n alpha)) / (2 sqrt(2 pi) cos alpha),

and S_j^n = (2 pi)^{-1/2} int_{-pi}^{pi} S^n(xi) exp(i j xi) dxi. The Chebyshev form is kept
as a cross-check: sqrt(2 pi) S^n = T_n(c)/c for odd n and -i C sin(xi) U_{n-1}(c)/c for even
n, c = cos alpha.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from errors import ValidationError
from special_fn.chebyshev import chebyshev

_logger = logging.getLogger(__name__)

_ROOT_2PI = math.sqrt(2.0 * math.pi)
_AGREEMENT = 1e-10


@dataclass
class FourierSymbolEval:
    xi: float
    z_phi: complex
    theta_phi: float
    f_plus: float
    f_minus: float
    g_xi: float


@dataclass
class ChebyshevComparison:
    n: int
    max_deviation: float
    agrees: bool


def _check(courant: float) -> float:
    c = float(courant)
    if c == 0.0 or abs(c) >= 1.0:
        raise ValidationError("need 0 < |C| < 1 (got %s)" % courant)
    return c


def _alpha(c: float, xi):
    return np.arcsin(c * np.sin(xi))


def green_symbol_points(courant: float, xi: float, nu: float = 0.0) -> FourierSymbolEval:
    c = _check(courant)
    alpha = float(_alpha(c, xi))
    return FourierSymbolEval(
        xi=float(xi),
        z_phi=complex(math.cos(alpha), -math.sin(alpha)),
        theta_phi=-alpha,
        f_plus=nu * xi + alpha,
        f_minus=nu * xi - alpha,
        g_xi=1.0 / (4.0 * math.pi * math.sqrt(1.0 - (c * math.sin(xi)) ** 2)),
    )


def green_fourier(courant: float, n: int, xi):
    """Exponential closed form of the transformed second Green function; xi may be an array."""
    c = _check(courant)
    if n < 0:
        raise ValidationError("n must be non-negative")
    alpha = _alpha(c, np.asarray(xi, dtype=float))
    sign = 1.0 if n % 2 else -1.0
    out = (np.exp(-1j * n * alpha) + sign * np.exp(1j * n * alpha)) / (2.0 * _ROOT_2PI * np.cos(alpha))
    if np.ndim(out) == 0:
        return complex(out)
    return out


def green_fourier_chebyshev(courant: float, n: int, xi):
    c = _check(courant)
    if n < 0:
        raise ValidationError("n must be non-negative")
    xi = np.asarray(xi, dtype=float)
    cos_alpha = np.sqrt(1.0 - (c * np.sin(xi)) ** 2)
    if n % 2:
        out = chebyshev("T", n, cos_alpha) / cos_alpha + 0j
    elif n == 0:
        out = np.zeros_like(cos_alpha) + 0j
    else:
        out = -1j * c * np.sin(xi) * chebyshev("U", n - 1, cos_alpha) / cos_alpha
    out = out / _ROOT_2PI
    if np.ndim(out) == 0:
        return complex(out)
    return out


def compare_chebyshev(courant: float, n: int, samples: int = 512) -> ChebyshevComparison:
    xi = np.linspace(-math.pi, math.pi, samples, endpoint=False)
    dev = float(np.max(np.abs(green_fourier(courant, n, xi) - green_fourier_chebyshev(courant, n, xi))))
    if dev > _AGREEMENT:
        _logger.warning("Chebyshev form deviates from the exponential form by %.3g at n=%d", dev, n)
    return ChebyshevComparison(n=n, max_deviation=dev, agrees=dev <= _AGREEMENT)


def _grid(samples: int) -> np.ndarray:
    if samples < 4:
        raise ValidationError("need at least 4 xi samples")
    return -math.pi + 2.0 * math.pi * np.arange(samples) / samples


def green_inverse(courant: float, n: int, js, samples: int = 4096) -> np.ndarray:
    """S_j^n by periodic trapezoid quadrature of the inverse transform (exact for samples > 2n)."""
    xi = _grid(samples)
    sym = green_fourier(courant, n, xi)
    js = np.atleast_1d(np.asarray(js, dtype=float))
    kernel = np.exp(1j * np.outer(js, xi))
    vals = (kernel @ sym) * (2.0 * math.pi / samples) / _ROOT_2PI
    if np.max(np.abs(vals.imag)) > 1e-9:
        _logger.warning("inverse transform has imaginary part %.3g", float(np.max(np.abs(vals.imag))))
    return vals.real


def parseval_norm(courant: float, n: int, samples: int = 4096) -> float:
    """(int |S^n(xi)|^2 dxi)^{1/2}."""
    xi = _grid(samples)
    sym = green_fourier(courant, n, xi)
    return math.sqrt(float(np.sum(np.abs(sym) ** 2)) * 2.0 * math.pi / samples)
