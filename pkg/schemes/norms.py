# -*- coding: utf-8 -*-
"""Norms, moments and fitted convergence orders of error fields."""

from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np

from errors import ValidationError
from schemes.model import ErrorField


def _parse_p(p: Union[float, str]) -> float:
    if isinstance(p, str):
        if p.strip().lower() in ("inf", "infinity", "oo"):
            return math.inf
        try:
            p = float(p)
        except ValueError:
            raise ValidationError("bad norm exponent %r" % (p,))
    p = float(p)
    if not (p >= 1.0):
        raise ValidationError("norm exponent must be >= 1 (got %s)" % (p,))
    return p


def lp_norm(fld: ErrorField, p: Union[float, str] = 2, scaled: bool = False) -> float:
    """(sum_j |values_j|^p)^(1/p); scaled multiplies by dx^(1/p)."""
    p = _parse_p(p)
    if scaled and fld.dx is None:
        raise ValidationError("scaled norm requested but the field carries no dx")
    values = fld.as_float()
    if values.size == 0:
        return 0.0
    norm = float(np.linalg.norm(values, ord=p))
    if scaled and not math.isinf(p):
        norm *= fld.dx ** (1.0 / p)
    return norm


def moments(fld: ErrorField, order: int = 0, alternating: bool = False):
    """sum_j j^order (-1)^(j alternating) values_j; Fraction fields stay exact."""
    if order not in (0, 1):
        raise ValidationError("moment order must be 0 or 1 (got %r)" % (order,))
    j = fld.j
    weights = np.ones(len(j), dtype=np.int64)
    if order == 1:
        weights = j.astype(np.int64)
    if alternating:
        weights = np.where(j % 2 == 1, -weights, weights)
    if fld.values.dtype == object:
        return sum(int(w) * v for w, v in zip(weights, fld.values) if w and v)
    return float(np.dot(weights.astype(float), fld.values))


def empirical_order(dxs: Sequence[float], norms: Sequence[float]) -> float:
    """Least-squares slope of log(norm) against log(dx)."""
    if len(dxs) != len(norms) or len(dxs) < 2:
        raise ValidationError("empirical_order needs at least two (dx, norm) pairs")
    x = np.log(np.asarray(dxs, dtype=float))
    y = np.log(np.asarray(norms, dtype=float))
    if not np.all(np.isfinite(y)):
        raise ValidationError("empirical_order needs positive norms")
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
