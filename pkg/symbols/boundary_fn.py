# -*- coding: utf-8 -*-
"""
Boundary determinant D(z) = z^2 - z sum_k b_k kappa_s^k - sum_k bt_k kappa_s^k, the
boundary function g = (2 pi i)^{-1} / D, the simple-zero test at z = -1 and the residue R.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from config import numerics_config
from errors import PoleError, ResidueConditionError, ValidationError
from schemes.model import BoundaryScheme, BulkScheme, Number
from symbols.roots import kappa_s, kappa_s_array

_logger = logging.getLogger(__name__)

# |D| below this is a pole of g.
POLE_TOLERANCE = 1e-13


@dataclass
class ResidueValue:
    r: float


def determinant_from_kappa(boundary: BoundaryScheme, z, kappa):
    """D for given z and kappa values (arrays broadcast)."""
    return z * z - z * P.polyval(kappa, boundary.b_array()) - P.polyval(kappa, boundary.bt_array())


def boundary_determinant(boundary: BoundaryScheme, bulk: BulkScheme, z, kappa: Optional[complex] = None):
    """D(z); z may be an array (ordered path, radial limits on the circle)."""
    if np.ndim(z) == 0:
        z = complex(z)
        k = kappa_s(bulk, z) if kappa is None else kappa
        return complex(determinant_from_kappa(boundary, z, k))
    zs = np.asarray(z, dtype=complex)
    k = kappa_s_array(bulk, zs) if kappa is None else np.asarray(kappa, dtype=complex)
    return determinant_from_kappa(boundary, zs, k)


def g_eval(boundary: BoundaryScheme, bulk: BulkScheme, z: complex) -> complex:
    d = boundary_determinant(boundary, bulk, z)
    if abs(d) < POLE_TOLERANCE:
        raise PoleError(complex(z))
    return 1.0 / (2j * math.pi * d)


def det_minus_one(boundary: BoundaryScheme) -> float:
    """D(-1) = 1 + sum b - sum bt (kappa_s(-1) = 1)."""
    return 1.0 + boundary.sum_b() - boundary.sum_bt()


def det_plus_one(boundary: BoundaryScheme) -> float:
    """D(1) = 1 - sum (-1)^k (b_k + bt_k) for leap-frog (kappa_s(1) = -1)."""
    return 1.0 - boundary.sum_k("b", alternating=True) - boundary.sum_k("bt", alternating=True)


def residue_denominator(boundary: BoundaryScheme, courant: Number) -> float:
    """2 + sum b + (1/C) sum k (b_k - bt_k)."""
    c = float(courant)
    if c == 0.0:
        raise ValidationError("courant must be nonzero")
    moment = boundary.sum_k("b", weight=True) - boundary.sum_k("bt", weight=True)
    return 2.0 + boundary.sum_b() + moment / c


def check_simple_zero_minus_one(boundary: BoundaryScheme, courant: Number) -> Tuple[bool, bool]:
    """(D(-1) = 0, derivative condition nonzero) within the coefficient tolerance."""
    tol = numerics_config.get_coefficient_tolerance()
    first = abs(det_minus_one(boundary)) <= tol
    second = abs(residue_denominator(boundary, courant)) > tol
    return first, second


def residue_R(boundary: BoundaryScheme, courant: Number) -> ResidueValue:
    """R = -1/(2 + sum b + (1/C) sum k (b_k - bt_k)): amplitude of the (-1)^n sawtooth."""
    first, second = check_simple_zero_minus_one(boundary, courant)
    if not first:
        raise ResidueConditionError("first", "1 + sum b - sum bt = %.3g, not zero: no pole at z = -1" % det_minus_one(boundary))
    if not second:
        raise ResidueConditionError("second", "2 + sum b + (1/C) sum k(b - bt) vanishes: the zero at z = -1 is not simple")
    return ResidueValue(r=-1.0 / residue_denominator(boundary, courant))
