# -*- coding: utf-8 -*-
"""
Long-time plateaus: the l^2 limit of eps^n (weighted Parseval quadrature over the two
unit-circle arcs where both characteristic roots are unimodular), the zero and first
moments, and the l^p exponent heuristic.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from config import numerics_config
from errors import BranchInconsistencyError, ValidationError
from schemes.model import BoundaryScheme, BulkKind, BulkScheme
from symbols.boundary_fn import determinant_from_kappa
from symbols.roots import kappa_s_array

_logger = logging.getLogger(__name__)


@dataclass
class QuadratureResult:
    value: float
    squared: float
    imag_residue: float
    nodes: int


def _arc_integral(boundary: BoundaryScheme, bulk: BulkScheme, nodes: int) -> complex:
    """Trapezoid sum over both arcs with theta = arcsin(|C| sin phi) (and pi - that)."""
    c = bulk.c
    ac = abs(c)
    phi = np.linspace(-0.5 * np.pi, 0.5 * np.pi, nodes + 1)
    weights = np.full(nodes + 1, np.pi / nodes)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    base = np.arcsin(ac * np.sin(phi))
    jac = ac * np.cos(phi)
    total = 0j
    for theta in (base, np.pi - base):
        w = np.exp(1j * theta)
        kappa = kappa_s_array(bulk, w)
        d = determinant_from_kappa(boundary, w, kappa)
        integrand = c * (kappa + 1.0 / kappa) / ((w + 1.0 / w) * 2.0 * np.pi * np.abs(d) ** 2)
        total += np.sum(weights * integrand * jac / np.abs(np.cos(theta)))
    return complex(total)


def l2_quadrature(boundary: BoundaryScheme, bulk: BulkScheme) -> QuadratureResult:
    if bulk.kind != BulkKind.LEAP_FROG:
        raise ValidationError("the l2 plateau is defined for the leap-frog bulk")
    nodes = numerics_config.get_quad_nodes()
    max_nodes = numerics_config.get_quad_max_nodes()
    tol = numerics_config.get_quad_tolerance()
    prev = _arc_integral(boundary, bulk, nodes)
    while True:
        if nodes * 2 > max_nodes:
            _logger.warning("l2 quadrature stopped at %d nodes without reaching %g", nodes, tol)
            break
        nodes *= 2
        cur = _arc_integral(boundary, bulk, nodes)
        if abs(cur - prev) < tol:
            prev = cur
            break
        prev = cur
    imag_tol = numerics_config.get_imag_residue_tolerance()
    if abs(prev.imag) > imag_tol:
        raise BranchInconsistencyError("l2 quadrature has imaginary residue %.3g > %.1g" % (abs(prev.imag), imag_tol))
    if prev.real <= 0.0:
        raise BranchInconsistencyError("l2 quadrature is not positive (%.6g)" % prev.real)
    return QuadratureResult(value=math.sqrt(prev.real), squared=prev.real, imag_residue=abs(prev.imag), nodes=nodes)


def l2_asymptote(boundary: BoundaryScheme, bulk: BulkScheme) -> float:
    """lim ||eps^n||_2 for a stable boundary."""
    return l2_quadrature(boundary, bulk).value


def dirichlet_l2_closed_form(courant: float) -> float:
    return math.sqrt(1.0 - math.sqrt(1.0 - courant * courant))


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def moment_asymptote(boundary: BoundaryScheme, courant: float, order: int, alternating: bool, n: int) -> float:
    """Closed-form zero/first moments of eps^n for large n."""
    c = float(courant)
    if order not in (0, 1):
        raise ValidationError("moment order must be 0 or 1")
    if alternating:
        if order == 1:
            raise ValidationError("no closed form for the alternating first moment")
        den = boundary.sum_k("b", alternating=True) + boundary.sum_k("bt", alternating=True) - 1.0
        if abs(den) < 1e-14:
            raise ValidationError("alternating moment denominator vanishes")
        return c / den
    s = 1.0 + boundary.sum_b() - boundary.sum_bt()
    if abs(s) < 1e-14:
        raise ValidationError("1 + sum(b - bt) vanishes")
    if order == 0:
        return c * _sign(n) / s
    moment = boundary.sum_k("b", weight=True) - boundary.sum_k("bt", weight=True)
    constant = c + (moment + c * (2.0 * boundary.sum_bt() - boundary.sum_b())) / s
    return -c * c * _sign(n) * n / s + c * _sign(n) / s * constant


def first_moment_slope(boundary: BoundaryScheme, courant: float) -> float:
    """Magnitude-carrying slope -C^2/(1 + sum(b - bt)) of the first moment in n, sign (-1)^n aside."""
    s = 1.0 + boundary.sum_b() - boundary.sum_bt()
    return -float(courant) ** 2 / s


@dataclass
class LpExponent:
    exponent: float
    dominant: str


def lp_exponent(p) -> LpExponent:
    """Growth exponent of ||eps^n||_p: max(1/p - 1/2, 1/(3p) - 1/3)."""
    p = float(p)
    if not p >= 1.0:
        raise ValidationError("p must be >= 1")
    inv = 0.0 if math.isinf(p) else 1.0 / p
    transition = inv - 0.5
    front = inv / 3.0 - 1.0 / 3.0
    if abs(transition - front) < 1e-15:
        dominant = "tie"
    elif transition > front:
        dominant = "transition"
    else:
        dominant = "front"
    return LpExponent(exponent=max(transition, front), dominant=dominant)


def lp_convergence_order(p) -> float:
    """Predicted l^p(dx N) order of the PDE error at fixed time: 1 + 1/p - exponent."""
    p = float(p)
    inv = 0.0 if math.isinf(p) else 1.0 / p
    return 1.0 + inv - lp_exponent(p).exponent
