# -*- coding: utf-8 -*-
"""
Error-model recurrences on the half line: eps^0 = 0, eps_0^1 = source, eps_j^1 = 0 (j >= 1),
then the boundary row from the BoundaryScheme and interior rows from the BulkScheme.
Only two time rows are live; requested snapshots and per-j time traces are copied out.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

import numpy as np

from errors import ValidationError
from schemes.model import BoundaryScheme, BulkKind, BulkScheme, ErrorField, Number, to_fraction

_logger = logging.getLogger(__name__)

# Cells kept when snapshots=None before falling back to the final row only.
_FULL_HISTORY_LIMIT = 20_000_000


@dataclass
class ErrorRun:
    """Result of simulate_error: snapshot rows keyed by n and time traces keyed by j."""

    bulk: BulkScheme
    boundary: BoundaryScheme
    n_max: int
    j_max: int
    fields: Dict[int, ErrorField] = field(default_factory=dict)
    traces: Dict[int, np.ndarray] = field(default_factory=dict)

    def __iter__(self) -> Iterator[ErrorField]:
        for n in sorted(self.fields):
            yield self.fields[n]

    def __len__(self) -> int:
        return len(self.fields)

    def row(self, n: int) -> ErrorField:
        if n not in self.fields:
            raise KeyError("row n=%d was not kept (snapshots: %s)" % (n, sorted(self.fields)[:10]))
        return self.fields[n]

    @property
    def final(self) -> ErrorField:
        return self.fields[self.n_max]


class BulkStencil:
    """Numeric coefficients of one bulk rule, float or Fraction."""

    def __init__(self, bulk: BulkScheme, exact: bool):
        conv = to_fraction if exact else float
        self.kind = bulk.kind
        self.c = conv(bulk.courant)
        one = conv(1)
        if bulk.kind == BulkKind.DISSIPATIVE:
            w = conv(bulk.omega)
            self.mean = (2 - w) / 2
            self.memory = w - one
            self.advect = w * self.c / 2
        elif bulk.kind == BulkKind.MANUFACTURED:
            self.q = self.c * (one - self.c)

    def interior(self, prev: np.ndarray, cur: np.ndarray) -> np.ndarray:
        """New values at indices 1..len-2 of the padded rows (last entry is a zero ghost)."""
        left = cur[:-2]
        right = cur[2:]
        if self.kind == BulkKind.LEAP_FROG:
            return prev[1:-1] + self.c * (left - right)
        if self.kind == BulkKind.DISSIPATIVE:
            return self.mean * (left + right) + self.memory * prev[1:-1] + self.advect * (left - right)
        return prev[1:-1] + self.c * (left - right) + self.q * (prev[:-2] - 2 * prev[1:-1] + prev[2:])


def _boundary_arrays(boundary: BoundaryScheme, exact: bool):
    conv = to_fraction if exact else float
    b = [conv(x) for x in boundary.b]
    bt = [conv(x) for x in boundary.bt]
    if exact:
        return np.array(b, dtype=object), np.array(bt, dtype=object)
    return np.array(b, dtype=float), np.array(bt, dtype=float)


def boundary_value(b: np.ndarray, bt: np.ndarray, cur: np.ndarray, prev: np.ndarray):
    """sum_k b_k cur_k + sum_k bt_k prev_k."""
    total = 0
    if len(b):
        total = total + np.dot(b, cur[: len(b)])
    if len(bt):
        total = total + np.dot(bt, prev[: len(bt)])
    return total


def default_window(boundary: BoundaryScheme, n_max: int) -> int:
    return n_max + boundary.width + 1


def simulate_error(
    bulk: BulkScheme,
    boundary: BoundaryScheme,
    n_max: int,
    j_max: Optional[int] = None,
    *,
    truncate: bool = False,
    snapshots: Optional[Iterable[int]] = None,
    traces: Sequence[int] = (),
    exact: bool = False,
    source: Number = 1,
) -> ErrorRun:
    """
    Run the error recurrence up to n_max on j = 0..j_max.

    snapshots=None keeps every row (final row only past a storage limit); traces records
    eps_j^n for every n at the listed j. exact=True runs on Fractions.
    """
    if int(n_max) != n_max or n_max < 1:
        raise ValidationError("n_max must be an integer >= 1 (got %r)" % (n_max,))
    n_max = int(n_max)
    if j_max is None:
        j_max = default_window(boundary, n_max)
    j_max = int(j_max)
    if j_max < boundary.width:
        raise ValidationError("j_max=%d is narrower than the boundary stencil (%d)" % (j_max, boundary.width))
    if j_max < n_max and not truncate:
        raise ValidationError(
            "j_max=%d < n_max=%d would clip the support; pass truncate=True to accept" % (j_max, n_max)
        )
    if j_max < n_max:
        _logger.warning("truncated window j_max=%d < n_max=%d: zero data beyond the right edge", j_max, n_max)

    if snapshots is None:
        if (n_max + 1) * (j_max + 1) > _FULL_HISTORY_LIMIT:
            _logger.warning("full history of %d x %d cells too large; keeping the final row only", n_max + 1, j_max + 1)
            keep = {n_max}
        else:
            keep = set(range(n_max + 1))
    else:
        keep = {int(n) for n in snapshots if 0 <= int(n) <= n_max}
        keep.add(n_max)
    trace_js = sorted({int(j) for j in traces})
    for j in trace_js:
        if not 0 <= j <= j_max:
            raise ValidationError("trace index j=%d outside 0..%d" % (j, j_max))

    stencil = BulkStencil(bulk, exact)
    b, bt = _boundary_arrays(boundary, exact)
    size = j_max + 2
    if exact:
        zero = Fraction(0)
        prev = np.full(size, zero, dtype=object)
        cur = np.full(size, zero, dtype=object)
        cur[0] = to_fraction(source)
        trace_store = {j: np.full(n_max + 1, zero, dtype=object) for j in trace_js}
    else:
        prev = np.zeros(size)
        cur = np.zeros(size)
        cur[0] = float(source)
        trace_store = {j: np.zeros(n_max + 1) for j in trace_js}

    run = ErrorRun(bulk=bulk, boundary=boundary, n_max=n_max, j_max=j_max)

    def record(n: int, row: np.ndarray) -> None:
        if n in keep:
            run.fields[n] = ErrorField(time_index=n, values=row[: j_max + 1].copy())
        for j, store in trace_store.items():
            store[n] = row[j]

    record(0, prev)
    record(1, cur)
    for n in range(1, n_max):
        nxt = np.empty_like(cur)
        nxt[1:-1] = stencil.interior(prev, cur)
        nxt[0] = boundary_value(b, bt, cur, prev)
        nxt[-1] = 0
        prev, cur = cur, nxt
        record(n + 1, cur)

    run.traces = trace_store
    _logger.debug("simulate_error %s n_max=%d j_max=%d exact=%s", bulk.kind.value, n_max, j_max, exact)
    return run


def manufactured_closed_form(courant: Number, n: int, j: int):
    """C * C^{j-1} (1-C)^{n-1-j} binom(n-2, j-1) for n >= 2, 1 <= j <= n-1; 0 elsewhere."""
    if n < 2 or j < 1 or j > n - 1:
        return 0 * courant
    return courant * courant ** (j - 1) * (1 - courant) ** (n - 1 - j) * comb(n - 2, j - 1)


def support_violations(run: ErrorRun) -> List[int]:
    """Time indices whose kept row has a nonzero entry at some j >= n."""
    bad = []
    for fld in run:
        n = fld.time_index
        tail = fld.values[n:]
        if len(tail) and any(v != 0 for v in tail):
            bad.append(n)
    return bad
