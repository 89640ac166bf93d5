# -*- coding: utf-8 -*-
"""Numerics config: load numerics_config.json, tolerances, grid sizes, quadrature settings."""

import json
import logging
import os
from typing import Any, Dict

_logger = logging.getLogger(__name__)

_CONFIG_DIR = os.path.dirname(os.path.abspath(__file__))
_CONFIG_PATH = os.environ.get("FDW_NUMERICS_CONFIG") or os.path.join(_CONFIG_DIR, "numerics_config.json")

_DEFAULT_CONFIG = {
    "kappa": {
        "radial_epsilon": 1e-8,
        "root_tie_tolerance": 1e-9,
    },
    "quadrature": {
        "nodes": 2 ** 14,
        "max_nodes": 2 ** 20,
        "tolerance": 1e-9,
        "imag_residue_tolerance": 1e-6,
    },
    "stability": {
        "delta": 1e-3,
        "grid": 2 ** 14,
        "max_grid": 2 ** 18,
        "unit_zero_threshold": 1e-6,
    },
    "zones": {
        "transition_margin": 1e-3,
        "front_halfwidth": 10.0,
        "near_wall_max_j": 20,
    },
    "coefficient_tolerance": 1e-12,
    "max_support": 64,
    "airy_range": 40.0,
}

_cached_config: Dict[str, Any] = {}


def _load_config() -> Dict[str, Any]:
    """Load config from JSON file, merge with defaults."""
    global _cached_config
    if _cached_config:
        return _cached_config
    result = json.loads(json.dumps(_DEFAULT_CONFIG))
    if os.path.isfile(_CONFIG_PATH):
        try:
            with open(_CONFIG_PATH, "r", encoding="utf-8") as f:
                data = json.load(f)
                if isinstance(data, dict):
                    _merge(result, data)
        except (json.JSONDecodeError, OSError) as e:
            _logger.warning("numerics config %s ignored: %s", _CONFIG_PATH, e)
    _cached_config = result
    return result


def _merge(base: dict, override: dict) -> None:
    """Merge override into base in-place."""
    for k, v in override.items():
        if k not in base:
            base[k] = v
        elif isinstance(base[k], dict) and isinstance(v, dict):
            _merge(base[k], v)
        else:
            base[k] = v


def _reload_config() -> None:
    """Clear cache so next load reads from file."""
    global _cached_config
    _cached_config = {}


def get(key: str, default: Any = None) -> Any:
    """Get a top-level config value."""
    cfg = _load_config()
    return cfg.get(key, default)


def _section(name: str, key: str) -> Any:
    sec = get(name)
    if isinstance(sec, dict) and key in sec:
        return sec[key]
    return _DEFAULT_CONFIG[name][key]


def _positive_float(val: Any, fallback: float) -> float:
    if isinstance(val, (int, float)) and not isinstance(val, bool) and val > 0:
        return float(val)
    return float(fallback)


def _positive_int(val: Any, fallback: int) -> int:
    if isinstance(val, (int, float)) and not isinstance(val, bool) and int(val) >= 1:
        return int(val)
    return int(fallback)


def get_radial_epsilon() -> float:
    """Radius offset 1 + eps used for unit-circle radial limits of kappa_s."""
    return _positive_float(_section("kappa", "radial_epsilon"), _DEFAULT_CONFIG["kappa"]["radial_epsilon"])


def get_root_tie_tolerance() -> float:
    """Two characteristic roots closer than this in modulus count as a branch-point tie."""
    return _positive_float(_section("kappa", "root_tie_tolerance"), _DEFAULT_CONFIG["kappa"]["root_tie_tolerance"])


def get_quad_nodes() -> int:
    """Initial trapezoid node count for the L2 plateau quadrature."""
    return _positive_int(_section("quadrature", "nodes"), _DEFAULT_CONFIG["quadrature"]["nodes"])


def get_quad_max_nodes() -> int:
    return _positive_int(_section("quadrature", "max_nodes"), _DEFAULT_CONFIG["quadrature"]["max_nodes"])


def get_quad_tolerance() -> float:
    """Stop doubling once successive quadrature values differ by less than this."""
    return _positive_float(_section("quadrature", "tolerance"), _DEFAULT_CONFIG["quadrature"]["tolerance"])


def get_imag_residue_tolerance() -> float:
    return _positive_float(
        _section("quadrature", "imag_residue_tolerance"),
        _DEFAULT_CONFIG["quadrature"]["imag_residue_tolerance"],
    )


def get_stability_delta() -> float:
    """Radius offset of the exterior winding circle."""
    return _positive_float(_section("stability", "delta"), _DEFAULT_CONFIG["stability"]["delta"])


def get_stability_grid() -> int:
    return _positive_int(_section("stability", "grid"), _DEFAULT_CONFIG["stability"]["grid"])


def get_stability_max_grid() -> int:
    return _positive_int(_section("stability", "max_grid"), _DEFAULT_CONFIG["stability"]["max_grid"])


def get_unit_zero_threshold() -> float:
    """Refined |D| minimum on the unit circle below which a zero is declared."""
    return _positive_float(
        _section("stability", "unit_zero_threshold"),
        _DEFAULT_CONFIG["stability"]["unit_zero_threshold"],
    )


def get_coefficient_tolerance() -> float:
    """Tolerance for coefficient identities (order constraints, simple-zero conditions)."""
    return _positive_float(get("coefficient_tolerance"), _DEFAULT_CONFIG["coefficient_tolerance"])


def get_max_support() -> int:
    """Largest stored support length of a boundary or corner coefficient sequence."""
    return _positive_int(get("max_support"), _DEFAULT_CONFIG["max_support"])


def get_airy_range() -> float:
    """Ai is evaluated on [-airy_range, airy_range]."""
    return _positive_float(get("airy_range"), _DEFAULT_CONFIG["airy_range"])


def get_transition_margin() -> float:
    """nu must stay this far inside (0, |C|) for the transition predictor."""
    return _positive_float(_section("zones", "transition_margin"), _DEFAULT_CONFIG["zones"]["transition_margin"])


def get_front_halfwidth() -> float:
    """The front zone is |j + C n| <= front_halfwidth * n^(1/3)."""
    return _positive_float(_section("zones", "front_halfwidth"), _DEFAULT_CONFIG["zones"]["front_halfwidth"])


def get_near_wall_max_j() -> int:
    """zone_of reports NearWall for every j up to this index."""
    return _positive_int(_section("zones", "near_wall_max_j"), _DEFAULT_CONFIG["zones"]["near_wall_max_j"])
