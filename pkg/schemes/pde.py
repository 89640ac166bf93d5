# -*- coding: utf-8 -*-
"""
Leap-frog approximation of u_t + a u_x = 0 on x >= 0 with a boundary scheme at x = 0, a
corner/start-up scheme for the first time step and the exact solution u°(x - a t) imposed
at the right edge of an extended window. Errors are reported on [0, window].
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from config import numerics_config
from errors import ValidationError
from schemes.library import check_order_constraints
from schemes.model import BoundaryScheme, BulkKind, BulkScheme, CornerScheme, ErrorField, Number
from schemes.norms import empirical_order, lp_norm
from schemes.simulate import BulkStencil, boundary_value

_logger = logging.getLogger(__name__)

Datum = Callable[[np.ndarray], np.ndarray]


def gaussian_datum(x):
    """u°(x) = exp(-50 (x - 1/10)^2)."""
    return np.exp(-50.0 * (np.asarray(x, dtype=float) - 0.1) ** 2)


def gaussian_datum_derivative(x):
    x = np.asarray(x, dtype=float)
    return -100.0 * (x - 0.1) * np.exp(-50.0 * (x - 0.1) ** 2)


def corner_error_amplitude(corner: CornerScheme, courant: Number, du0: float) -> float:
    """-(C + sum_k k c_k) du°/dx(0): weight of dx * eps in the global error model."""
    sum_kc = sum(k * float(x) for k, x in enumerate(corner.c))
    return -(float(courant) + sum_kc) * float(du0)


@dataclass
class PdeRun:
    dx: float
    dt: float
    courant: float
    velocity: float
    n_steps: int
    t_final: float
    u_fields: List[ErrorField] = field(default_factory=list)
    e_fields: List[ErrorField] = field(default_factory=list)
    meta: Dict[str, object] = field(default_factory=dict)

    @property
    def final_error(self) -> ErrorField:
        return self.e_fields[-1]


def simulate_pde(
    boundary: BoundaryScheme,
    corner: CornerScheme,
    initial_datum: Datum,
    dx: float,
    courant: float,
    t_final: float,
    *,
    velocity: float = -1.0,
    window: float = 1.0,
    snapshots: Optional[Iterable[int]] = None,
) -> PdeRun:
    """
    u_j^0 = u°(j dx); u_0^1 = sum_k c_k u_k^0; u_j^1 = sum_{k>=-1} s_k u_{j+k}^0; then the
    boundary row and leap-frog. dt = C dx / a. Rows kept: n = 0 and the final step unless
    snapshots says otherwise.
    """
    dx = float(dx)
    c = float(courant)
    a = float(velocity)
    if not dx > 0.0:
        raise ValidationError("dx must be positive")
    if not (-1.0 < c < 0.0):
        raise ValidationError("PDE demo needs -1 < courant < 0 (got %s)" % (courant,))
    if a == 0.0:
        raise ValidationError("velocity must be nonzero")
    dt = c * dx / a
    if dt <= 0.0:
        raise ValidationError("courant and velocity must give a positive time step (C/a > 0)")
    if t_final < 0.0:
        raise ValidationError("t_final must be non-negative")
    limit = numerics_config.get_max_support()
    if len(corner.c) > limit or len(corner.s) + 1 > limit:
        raise ValidationError("corner scheme exceeds the stored support bound %d" % limit)

    n_steps = int(round(t_final / dt))
    if abs(n_steps * dt - t_final) > 1e-9 * max(1.0, t_final):
        _logger.info("t_final=%s is not a multiple of dt=%s; using %s", t_final, dt, n_steps * dt)
    margin = 16 + int(math.ceil(4.0 * n_steps ** (1.0 / 3.0)))
    j_window = int(math.floor(window / dx + 1e-9))
    j_edge = int(math.ceil((window + abs(a) * n_steps * dt) / dx)) + margin
    x = dx * np.arange(j_edge + 1)

    def exact(n: int) -> np.ndarray:
        return np.asarray(initial_datum(x - a * n * dt), dtype=float)

    keep = {0, n_steps} if snapshots is None else ({int(n) for n in snapshots} | {n_steps})
    run = PdeRun(dx=dx, dt=dt, courant=c, velocity=a, n_steps=n_steps, t_final=n_steps * dt)
    run.meta.update(
        {"window_cells": j_window, "edge_cells": j_edge, "orders": check_order_constraints(corner, boundary, c)}
    )

    def record(n: int, row: np.ndarray) -> None:
        if n not in keep:
            return
        u = row[: j_window + 1].copy()
        e = exact(n)[: j_window + 1] - u
        run.u_fields.append(ErrorField(time_index=n, values=u, dx=dx))
        run.e_fields.append(ErrorField(time_index=n, values=e, dx=dx))

    prev = exact(0)
    record(0, prev)
    if n_steps == 0:
        return run

    cur = np.zeros_like(prev)
    cur[0] = float(np.dot([float(v) for v in corner.c], prev[: len(corner.c)]))
    for k, s_k in corner.s_items():
        s_k = float(s_k)
        if s_k == 0.0:
            continue
        lo = max(1, -k)
        hi = j_edge - max(k, 0)
        cur[lo:hi] += s_k * prev[lo + k : hi + k]
    tail = max(len(corner.s), 1)
    cur[j_edge - tail + 1 :] = exact(1)[j_edge - tail + 1 :]
    record(1, cur)

    stencil = BulkStencil(BulkScheme(BulkKind.LEAP_FROG, c), exact=False)
    b = boundary.b_array() if boundary.b else np.zeros(0)
    bt = boundary.bt_array() if boundary.bt else np.zeros(0)
    for n in range(1, n_steps):
        nxt = np.empty_like(cur)
        nxt[1:-1] = stencil.interior(prev, cur)
        nxt[0] = boundary_value(b, bt, cur, prev)
        nxt[-1] = initial_datum(np.array([x[-1] - a * (n + 1) * dt]))[0]
        prev, cur = cur, nxt
        record(n + 1, cur)
    _logger.debug("simulate_pde dx=%s n_steps=%d edge=%d", dx, n_steps, j_edge)
    return run


@dataclass
class OrderStudy:
    dxs: List[float]
    norms: List[float]
    order: float
    p: float


def pde_order_study(
    boundary: BoundaryScheme,
    corner: CornerScheme,
    dxs: Sequence[float],
    courant: float,
    t_final: float,
    *,
    initial_datum: Datum = gaussian_datum,
    p: float = 2.0,
) -> OrderStudy:
    """Final-time l^p(dx N) error norms over dxs and the fitted slope."""
    norms = []
    for dx in dxs:
        run = simulate_pde(boundary, corner, initial_datum, dx, courant, t_final)
        norms.append(lp_norm(run.final_error, p, scaled=True))
        _logger.info("dx=%s n=%d error=%.6e", dx, run.n_steps, norms[-1])
    return OrderStudy(dxs=[float(d) for d in dxs], norms=norms, order=empirical_order(dxs, norms), p=float(p))
