# -*- coding: utf-8 -*-
"""Chebyshev polynomials T_n and U_n on [-1, 1]."""

from __future__ import annotations

import numpy as np
from scipy import special

from errors import ValidationError

_SLACK = 1e-12


def chebyshev(kind: str, n: int, x):
    if int(n) != n or n < 0:
        raise ValidationError("Chebyshev degree must be a non-negative integer (got %r)" % (n,))
    kind = (kind or "").upper()
    if kind not in ("T", "U"):
        raise ValidationError("Chebyshev kind must be 'T' or 'U' (got %r)" % (kind,))
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0 + _SLACK):
        raise ValidationError("Chebyshev argument outside [-1, 1]")
    fn = special.eval_chebyt if kind == "T" else special.eval_chebyu
    out = fn(int(n), np.clip(arr, -1.0, 1.0))
    if np.ndim(out) == 0:
        return float(out)
    return out
