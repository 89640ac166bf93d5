# -*- coding: utf-8 -*-
"""Finite-difference wall configuration: app constants and numerical tolerances."""

from config.app_config import (
    AIRY_TABLE_PATH,
    APP_DIR,
    DATA_DIR,
    FDW_CSV_DIGITS,
    FDW_LOG_LEVEL,
    FDW_OUTPUT_DIR,
    FDW_SLOW_TESTS,
    FDW_THREADS,
)
from config import numerics_config

__all__ = [
    "AIRY_TABLE_PATH",
    "APP_DIR",
    "DATA_DIR",
    "FDW_CSV_DIGITS",
    "FDW_LOG_LEVEL",
    "FDW_OUTPUT_DIR",
    "FDW_SLOW_TESTS",
    "FDW_THREADS",
    "numerics_config",
]
