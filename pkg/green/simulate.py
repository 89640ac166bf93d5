# -*- coding: utf-8 -*-
"""
First and second Green functions of the leap-frog scheme on the whole lattice:
F^0 = delta, F^1 = 0 and S^0 = 0, S^1 = delta, both advanced with
u_j^{n+1} = u_j^{n-1} + C (u_{j-1}^n - u_{j+1}^n).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Tuple

import numpy as np

from errors import ValidationError
from schemes.model import Number, to_fraction

_logger = logging.getLogger(__name__)

_FULL_HISTORY_LIMIT = 20_000_000


class GreenKind(str, Enum):
    FIRST = "First"
    SECOND = "Second"

    @classmethod
    def parse(cls, text) -> "GreenKind":
        if isinstance(text, GreenKind):
            return text
        key = str(text).strip().lower()
        for kind in cls:
            if key in (kind.value.lower(), kind.name.lower(), kind.value[0].lower()):
                return kind
        raise ValidationError("unknown Green function %r (First or Second)" % (text,))


@dataclass
class GreenField:
    """One time row over j = -half_width .. half_width."""

    which: GreenKind
    n: int
    values: np.ndarray
    half_width: int

    @property
    def j(self) -> np.ndarray:
        return np.arange(-self.half_width, self.half_width + 1)

    def at(self, j: int):
        k = j + self.half_width
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0 * self.values[0]

    def as_float(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def l2(self) -> float:
        return float(np.linalg.norm(self.as_float()))


def _check_courant(courant: Number, exact: bool):
    c = to_fraction(courant) if exact else float(courant)
    if c == 0 or abs(c) >= 1:
        raise ValidationError("Green functions need 0 < |C| < 1 (got %s)" % courant)
    return c


def green_rows(
    courant: Number,
    which,
    n_max: int,
    half_width: Optional[int] = None,
    exact: bool = False,
) -> Iterator[Tuple[int, np.ndarray]]:
    """Yield (n, row) for n = 0..n_max; rows are padded with one zero ghost on each side."""
    which = GreenKind.parse(which)
    c = _check_courant(courant, exact)
    if int(n_max) != n_max or n_max < 0:
        raise ValidationError("n_max must be a non-negative integer")
    n_max = int(n_max)
    half = n_max + 1 if half_width is None else int(half_width)
    if half < 1:
        raise ValidationError("half_width must be positive")
    size = 2 * half + 3
    centre = half + 1
    if exact:
        zero = Fraction(0)
        prev = np.full(size, zero, dtype=object)
        cur = np.full(size, zero, dtype=object)
        one = Fraction(1)
    else:
        prev = np.zeros(size)
        cur = np.zeros(size)
        one = 1.0
    if which == GreenKind.FIRST:
        prev[centre] = one
    else:
        cur[centre] = one
    yield 0, prev
    if n_max >= 1:
        yield 1, cur
    for n in range(1, n_max):
        nxt = np.empty_like(cur)
        nxt[1:-1] = prev[1:-1] + c * (cur[:-2] - cur[2:])
        nxt[0] = 0
        nxt[-1] = 0
        prev, cur = cur, nxt
        yield n + 1, cur


def green_simulate(
    courant: Number,
    which,
    n_max: int,
    *,
    half_width: Optional[int] = None,
    snapshots: Optional[Iterable[int]] = None,
    exact: bool = False,
) -> List[GreenField]:
    """
    Rows n = 0..n_max of the chosen Green function on a support-sized window.

    snapshots=None keeps every row unless that exceeds the storage limit, in which case
    only the final row is returned.
    """
    which = GreenKind.parse(which)
    half = int(n_max) + 1 if half_width is None else int(half_width)
    if snapshots is None:
        if (n_max + 1) * (2 * half + 1) > _FULL_HISTORY_LIMIT:
            _logger.warning("Green history too large; keeping the final row only")
            keep = {int(n_max)}
        else:
            keep = set(range(int(n_max) + 1))
    else:
        keep = {int(n) for n in snapshots}
        keep.add(int(n_max))
    out: List[GreenField] = []
    for n, row in green_rows(courant, which, n_max, half, exact):
        if n in keep:
            out.append(GreenField(which=which, n=n, values=row[1:-1].copy(), half_width=half))
    return out


def green_l2_series(courant: Number, n: int) -> float:
    """||S^n||_2 from the recurrence."""
    last = None
    for _, row in green_rows(courant, GreenKind.SECOND, n):
        last = row
    return float(np.linalg.norm(last))


def green_l2_norms(courant: Number, n_max: int) -> np.ndarray:
    """||S^n||_2 for n = 0..n_max in one sweep."""
    out = np.zeros(int(n_max) + 1)
    for n, row in green_rows(courant, GreenKind.SECOND, n_max):
        out[n] = np.linalg.norm(row)
    return out


def green_trace_series(courant: Number, n_max: int, j: int = 0) -> np.ndarray:
    """S_j^n for n = 0..n_max at a fixed j."""
    half = int(n_max) + 1
    if abs(j) > half:
        return np.zeros(int(n_max) + 1)
    out = np.zeros(int(n_max) + 1)
    for n, row in green_rows(courant, GreenKind.SECOND, n_max, half):
        out[n] = row[j + half + 1]
    return out


def reverse_step(courant: Number, cur: np.ndarray, nxt: np.ndarray) -> np.ndarray:
    """Row n-1 recovered from rows n and n+1 (rows over the same j window, zero outside)."""
    c = to_fraction(courant) if isinstance(cur[0], Fraction) else float(courant)
    padded = np.concatenate(([0 * cur[0]], cur, [0 * cur[0]]))
    return nxt - c * (padded[:-2] - padded[2:])
