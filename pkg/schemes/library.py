# -*- coding: utf-8 -*-
"""
Named boundary and corner schemes, order-constraint checks, JSON coefficient files.
"""

from __future__ import annotations

import json
import logging
import math
import os
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from config import DATA_DIR, numerics_config
from errors import SchemeFileError, ValidationError
from schemes.model import BoundaryScheme, CornerScheme, Number, parse_number

_logger = logging.getLogger(__name__)


def _is_exact(*values: Number) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def _half(x: Number) -> Number:
    return Fraction(x) / 2 if _is_exact(x) else 0.5 * x


def upwind(courant: Number) -> BoundaryScheme:
    """eps_0^{n+1} = (1+C) eps_0^n - C eps_1^n."""
    return BoundaryScheme(b=(1 + courant, -courant), name="upwind")


def upwind_diffusion(courant: Number, delta: Number) -> BoundaryScheme:
    """Upwind plus numerical diffusion of strength delta on the previous level."""
    d = _half(delta * courant)
    return BoundaryScheme(
        b=(1 + courant, -courant),
        bt=(d, -delta * courant, d),
        name="upwind_diffusion",
    )


def dirichlet() -> BoundaryScheme:
    return BoundaryScheme(name="dirichlet")


def unstable_minus_one(courant: Number) -> BoundaryScheme:
    """Boundary with a simple determinant zero at z = -1 (bounded sawtooth)."""
    a = 1 + 2 * courant
    return BoundaryScheme(b=(a, -a), bt=(0, 1), name="unstable_minus_one")


def anti_bounce_back(courant: Number) -> BoundaryScheme:
    return BoundaryScheme(b=(courant, -courant), bt=(1,), name="anti_bounce_back")


def glancing_instability(courant: float, nu_bar: float) -> BoundaryScheme:
    """
    b_0 = 2 sqrt((1 - C^2)/(1 - nu_bar^2)), bt_0 = -1: the boundary determinant vanishes
    on the transition saddle pair of nu_bar.
    """
    c = float(courant)
    nb = float(nu_bar)
    if not (0.0 < nb < abs(c) < 1.0):
        raise ValidationError("glancing_instability needs 0 < nu_bar < |C| < 1")
    return BoundaryScheme(b=(2.0 * math.sqrt((1.0 - c * c) / (1.0 - nb * nb)),), bt=(-1,), name="glancing_instability")


def lax_friedrichs_corner(courant: Number) -> CornerScheme:
    """s_{-1} = (1+C)/2, s_0 = 0, s_1 = (1-C)/2; c = ((1+C)/2, (1-C)/2)."""
    lo = _half(1 + courant)
    hi = _half(1 - courant)
    return CornerScheme(c=(lo, hi), s_minus1=lo, s=(0, hi))


NAMED_SCHEMES = {
    "upwind": upwind,
    "upwind_diffusion": upwind_diffusion,
    "dirichlet": dirichlet,
    "unstable_minus_one": unstable_minus_one,
    "ex29": unstable_minus_one,
    "anti_bounce_back": anti_bounce_back,
    "glancing_instability": glancing_instability,
}


def named_boundary(name: str, courant: Number, *params: Number) -> BoundaryScheme:
    key = (name or "").strip().lower().replace("-", "_")
    factory = NAMED_SCHEMES.get(key)
    if factory is None:
        raise ValidationError("unknown boundary scheme %r (known: %s)" % (name, ", ".join(sorted(NAMED_SCHEMES))))
    if factory is dirichlet:
        return factory()
    if factory in (upwind_diffusion, glancing_instability):
        if len(params) != 1:
            raise ValidationError("%s needs one extra parameter" % key)
        return factory(courant, params[0])
    return factory(courant)


def check_order_constraints(corner: CornerScheme, boundary: BoundaryScheme, courant: Number) -> Dict[str, bool]:
    """Six booleans: corner consistency, first-order corner, bulk start-up, boundary consistency."""
    tol = numerics_config.get_coefficient_tolerance()
    c = float(courant)
    sum_c = sum(float(x) for x in corner.c)
    sum_kc = sum(k * float(x) for k, x in enumerate(corner.c))
    sum_s = sum(float(v) for _, v in corner.s_items())
    sum_ks = sum(k * float(v) for k, v in corner.s_items())
    sum_b = boundary.sum_b() + boundary.sum_bt()
    sum_kb = boundary.sum_k("b", weight=True) + boundary.sum_k("bt", weight=True)
    return {
        "corner_consistent": abs(sum_c - 1.0) <= tol,
        "corner_first_order": abs(sum_kc + c) > tol,
        "startup_consistent": abs(sum_s - 1.0) <= tol,
        "startup_first_moment": abs(sum_ks + c) <= tol,
        "boundary_consistent": abs(sum_b - 1.0) <= tol,
        "boundary_first_moment": abs(sum_kb + c * (1.0 + boundary.sum_bt())) <= tol,
    }


def _number_list(data: Dict[str, Any], key: str, path: str) -> Optional[Tuple[Number, ...]]:
    if key not in data or data[key] is None:
        return None
    raw = data[key]
    if not isinstance(raw, list):
        raise SchemeFileError(path, "%r must be a list" % key)
    try:
        return tuple(parse_number(v) for v in raw)
    except ValidationError as e:
        raise SchemeFileError(path, "%s: %s" % (key, e))


def load_scheme_file(path: str) -> Tuple[BoundaryScheme, Optional[CornerScheme]]:
    """
    Read {"b": [...], "bt": [...], "c": [...], "s_minus1": x, "s": [...]}; numbers may be
    JSON numbers or "p/q" strings. Bare names resolve against schemes/data/.
    """
    if not os.path.isfile(path):
        candidate = os.path.join(DATA_DIR, path if path.endswith(".json") else path + ".json")
        if os.path.isfile(candidate):
            path = candidate
        else:
            raise SchemeFileError(path, "file not found")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemeFileError(path, "invalid JSON: %s" % e)
    except OSError as e:
        raise SchemeFileError(path, str(e))
    if not isinstance(data, dict):
        raise SchemeFileError(path, "top level must be an object")
    unknown = set(data) - {"b", "bt", "c", "s_minus1", "s", "name", "courant", "comment"}
    if unknown:
        raise SchemeFileError(path, "unknown keys: %s" % ", ".join(sorted(unknown)))
    try:
        boundary = BoundaryScheme(
            b=_number_list(data, "b", path) or (),
            bt=_number_list(data, "bt", path) or (),
            name=str(data.get("name") or os.path.splitext(os.path.basename(path))[0]),
        )
        corner = None
        if any(k in data for k in ("c", "s", "s_minus1")):
            corner = CornerScheme(
                c=_number_list(data, "c", path) or (1,),
                s_minus1=parse_number(data.get("s_minus1", 0)),
                s=_number_list(data, "s", path) or (1,),
            )
    except SchemeFileError:
        raise
    except ValidationError as e:
        raise SchemeFileError(path, str(e))
    _logger.debug("loaded scheme %s: b=%s bt=%s", path, boundary.b, boundary.bt)
    return boundary, corner


def save_scheme_file(path: str, boundary: BoundaryScheme, corner: Optional[CornerScheme] = None) -> None:
    payload = boundary.to_json()
    payload["name"] = boundary.name
    if corner is not None:
        payload.update(corner.to_json())
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
