# -*- coding: utf-8 -*-
"""Airy Ai on the supported real range and its primitive from 0."""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import special

from config import AIRY_TABLE_PATH, numerics_config
from errors import ValidationError

_logger = logging.getLogger(__name__)

AI_ZERO = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
PRIMITIVE_PLUS_INF = 1.0 / 3.0
PRIMITIVE_MINUS_INF = -2.0 / 3.0


@dataclass
class AiryEval:
    x: float
    ai: float
    primitive: float


def _check_range(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    limit = numerics_config.get_airy_range()
    if np.any(np.isnan(arr)) or np.any(np.abs(arr) > limit):
        raise ValidationError("Airy argument outside [-%g, %g]" % (limit, limit))
    return arr


def airy_ai(x):
    """Ai(x); scalar in, float out; arrays map elementwise."""
    arr = _check_range(x)
    ai = special.airy(arr)[0]
    if np.ndim(ai) == 0:
        return float(ai)
    return ai


def airy_primitive(x):
    """int_0^x Ai(y) dy for x >= -range; +inf gives 1/3 exactly and -inf gives -2/3."""
    arr = np.asarray(x, dtype=float)
    if np.ndim(arr) == 0:
        v = float(arr)
        if v == math.inf:
            return PRIMITIVE_PLUS_INF
        if v == -math.inf:
            return PRIMITIVE_MINUS_INF
    limit = numerics_config.get_airy_range()
    finite = arr[np.isfinite(arr)]
    if np.any(np.isnan(arr)) or np.any(finite < -limit):
        raise ValidationError("Airy primitive argument below -%g" % limit)
    apt, _, ant, _ = special.itairy(np.abs(arr))
    out = np.where(arr >= 0.0, apt, -ant)
    out = np.where(arr == math.inf, PRIMITIVE_PLUS_INF, out)
    if np.ndim(out) == 0:
        return float(out)
    return out


def airy_eval(x: float) -> AiryEval:
    return AiryEval(x=float(x), ai=airy_ai(x), primitive=airy_primitive(x))


def load_reference_table(path: str = AIRY_TABLE_PATH) -> Tuple[np.ndarray, np.ndarray]:
    """Frozen `x,ai` oracle table written by scripts/build_airy_table.py."""
    if not os.path.isfile(path):
        raise FileNotFoundError(path)
    data = np.genfromtxt(path, delimiter=",", names=True, dtype=float)
    return np.atleast_1d(data["x"]), np.atleast_1d(data["ai"])
