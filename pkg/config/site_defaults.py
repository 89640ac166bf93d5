# -*- coding: utf-8 -*-
"""
Single source of default config values. No other config modules imported (avoid circular import).
Override via env: os.environ.get("KEY", get_default("KEY")).
Override by profile: set FDW_PROFILE=fast (or other key in PROFILES) to use that profile for defaults.
"""

import os

# Defaults for interactive runs. All values as strings; consumers convert (int, float, bool) as needed.
DEFAULT = {
    # Runtime
    "FDW_THREADS": "4",
    "FDW_LOG_LEVEL": "WARNING",
    "FDW_OUTPUT_DIR": "",
    "FDW_CSV_DIGITS": "17",
    # Long runs (10^4 x 10^4 grids) in the test suite
    "FDW_SLOW_TESTS": "0",
    # Default experiment sizes used by the CLI when flags are omitted
    "FDW_DEFAULT_NMAX": "2000",
    "FDW_DEFAULT_COURANT": "-1/2",
    "FDW_PDE_T_FINAL": "1.6",
    "FDW_TRACE_N": "100000",
}

# Named profiles; keys absent from a profile fall back to DEFAULT.
PROFILES = {
    "fast": {
        "FDW_DEFAULT_NMAX": "500",
        "FDW_TRACE_N": "10000",
        "FDW_THREADS": "1",
    },
    "long": {
        "FDW_DEFAULT_NMAX": "10000",
        "FDW_SLOW_TESTS": "1",
        "FDW_THREADS": "8",
    },
}


def get_default(key: str):
    """Return default for key: PROFILES[FDW_PROFILE][key] if set, else DEFAULT[key]. Env overrides are applied by callers."""
    profile_name = os.environ.get("FDW_PROFILE", "default")
    profile = PROFILES.get(profile_name, {})
    if key in profile:
        return profile[key]
    return DEFAULT.get(key)
