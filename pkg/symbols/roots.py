# -*- coding: utf-8 -*-
"""
The stable characteristic root kappa_s(z) of the bulk quadratic
a2(z) k^2 + a1(z) k + a0(z) = 0 and its z-derivatives.

Off the unit disk kappa_s is the smaller-modulus root. On the unit circle it is the radial
limit: the branch is chosen at z(1 + eps)/|z| and the exact root at z closest to it is
returned. No explicit square-root branch of the discriminant is ever used for selection.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from config import numerics_config
from errors import ValidationError
from schemes.model import BulkScheme

_logger = logging.getLogger(__name__)


@dataclass
class KappaEval:
    value: complex
    other: complex
    on_circle: bool = False
    tie: bool = False


def _coeffs_at(bulk: BulkScheme, z):
    a2, a1, a0 = bulk.char_polys()
    return P.polyval(z, a2), P.polyval(z, a1), P.polyval(z, a0)


def quadratic_roots(a2, a1, a0) -> Tuple[np.ndarray, np.ndarray]:
    """Both roots, cancellation-free; a vanishing a2 gives the linear root and inf."""
    a2 = np.asarray(a2, dtype=complex)
    a1 = np.asarray(a1, dtype=complex)
    a0 = np.asarray(a0, dtype=complex)
    sq = np.sqrt(a1 * a1 - 4.0 * a2 * a0)
    sign = np.where((np.conj(a1) * sq).real >= 0.0, 1.0, -1.0)
    q = -0.5 * (a1 + sign * sq)
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = np.where(a2 != 0, q / np.where(a2 != 0, a2, 1.0), np.inf)
        r2 = np.where(q != 0, a0 / np.where(q != 0, q, 1.0), 0.0)
        linear = (a2 == 0) & (a1 != 0)
        r2 = np.where(linear, -a0 / np.where(a1 != 0, a1, 1.0), r2)
    return r1, r2


def all_roots(bulk: BulkScheme, z) -> Tuple[np.ndarray, np.ndarray]:
    a2, a1, a0 = _coeffs_at(bulk, np.asarray(z, dtype=complex))
    return quadratic_roots(a2, a1, a0)


def _select_small(r1: np.ndarray, r2: np.ndarray):
    m1 = np.abs(r1)
    m2 = np.abs(r2)
    small = np.where(m1 <= m2, r1, r2)
    big = np.where(m1 <= m2, r2, r1)
    tie = np.abs(m1 - m2) < numerics_config.get_root_tie_tolerance()
    return small, big, tie


def kappa_s_eval(bulk: BulkScheme, z: complex, previous: Optional[complex] = None) -> KappaEval:
    """Scalar kappa_s with diagnostics; `previous` resolves modulus ties by continuity."""
    z = complex(z)
    r = abs(z)
    eps = numerics_config.get_radial_epsilon()
    if r == 0.0:
        raise ValidationError("kappa_s is undefined at z = 0")
    if r < 1.0 - eps:
        raise ValidationError("kappa_s is only defined on the closed exterior of the unit disk (|z| = %.6g)" % r)
    on_circle = r <= 1.0 + eps
    shifted = z * (1.0 + eps) / r if on_circle else z
    r1, r2 = all_roots(bulk, shifted)
    small, big, tie = _select_small(r1, r2)
    small, big, tie = complex(small), complex(big), bool(tie)
    if tie and previous is not None:
        if abs(big - previous) < abs(small - previous):
            small, big = big, small
    if tie:
        _logger.debug("kappa_s root tie at z=%s (branch point)", z)
    if on_circle:
        e1, e2 = all_roots(bulk, z)
        e1, e2 = complex(e1), complex(e2)
        if abs(e1 - small) <= abs(e2 - small):
            small, big = e1, e2
        else:
            small, big = e2, e1
    return KappaEval(value=small, other=big, on_circle=on_circle, tie=tie)


def kappa_s(bulk: BulkScheme, z: complex, previous: Optional[complex] = None) -> complex:
    """kappa_s(z) for |z| >= 1 (radial limit on the circle)."""
    return kappa_s_eval(bulk, z, previous).value


def kappa_s_array(bulk: BulkScheme, zs) -> np.ndarray:
    """Vectorised kappa_s over an ordered path; ties follow the previous sample."""
    zs = np.asarray(zs, dtype=complex)
    r = np.abs(zs)
    eps = numerics_config.get_radial_epsilon()
    if np.any(r == 0.0) or np.any(r < 1.0 - eps):
        raise ValidationError("kappa_s_array needs |z| >= 1")
    on_circle = r <= 1.0 + eps
    shifted = np.where(on_circle, zs * (1.0 + eps) / np.where(r > 0, r, 1.0), zs)
    r1, r2 = all_roots(bulk, shifted)
    small, big, tie = _select_small(r1, r2)
    flat_small = small.reshape(-1)
    flat_big = big.reshape(-1)
    for i in np.flatnonzero(tie.reshape(-1)):
        if i == 0:
            continue
        ref = flat_small[i - 1]
        if abs(flat_big[i] - ref) < abs(flat_small[i] - ref):
            flat_small[i], flat_big[i] = flat_big[i], flat_small[i]
    small = flat_small.reshape(zs.shape)
    if np.any(on_circle):
        e1, e2 = all_roots(bulk, zs)
        pick_first = np.abs(e1 - small) <= np.abs(e2 - small)
        small = np.where(on_circle, np.where(pick_first, e1, e2), small)
    return small


def char_residual(bulk: BulkScheme, z: complex, kappa: complex) -> complex:
    a2, a1, a0 = _coeffs_at(bulk, z)
    return a2 * kappa * kappa + a1 * kappa + a0


def kappa_derivatives(bulk: BulkScheme, z: complex, kappa: Optional[complex] = None) -> Tuple[complex, complex, complex]:
    """
    (kappa, kappa', kappa'') by implicit differentiation of F(kappa, z) = 0 along the root
    `kappa` (kappa_s when omitted). Fails at branch points where dF/dkappa vanishes.
    """
    z = complex(z)
    if kappa is None:
        kappa = kappa_s(bulk, z)
    a2, a1, a0 = bulk.char_polys()
    d2, d1, d0 = P.polyder(a2), P.polyder(a1), P.polyder(a0)
    dd2, dd1, dd0 = P.polyder(a2, 2), P.polyder(a1, 2), P.polyder(a0, 2)
    v2 = P.polyval(z, a2)
    v1 = P.polyval(z, a1)
    f_k = 2.0 * v2 * kappa + v1
    if abs(f_k) < 1e-14:
        raise ValidationError("kappa derivative undefined at branch point z = %r" % (z,))
    f_z = P.polyval(z, d2) * kappa ** 2 + P.polyval(z, d1) * kappa + P.polyval(z, d0)
    f_zz = P.polyval(z, dd2) * kappa ** 2 + P.polyval(z, dd1) * kappa + P.polyval(z, dd0)
    f_zk = 2.0 * P.polyval(z, d2) * kappa + P.polyval(z, d1)
    k1 = -f_z / f_k
    k2 = -(f_zz + 2.0 * f_zk * k1 + 2.0 * v2 * k1 * k1) / f_k
    return complex(kappa), complex(k1), complex(k2)
