# -*- coding: utf-8 -*-
"""Central application configuration: paths, threads, logging, CSV formatting."""

import os

from config.site_defaults import get_default

APP_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = os.path.join(APP_DIR, "schemes", "data")
SPECIAL_FN_DATA_DIR = os.path.join(APP_DIR, "special_fn", "data")
AIRY_TABLE_PATH = os.path.join(SPECIAL_FN_DATA_DIR, "airy_reference.csv")

FDW_THREADS = max(1, int(os.environ.get("FDW_THREADS", get_default("FDW_THREADS"))))
FDW_LOG_LEVEL = (os.environ.get("FDW_LOG_LEVEL", get_default("FDW_LOG_LEVEL")) or "WARNING").strip().upper()
FDW_OUTPUT_DIR = os.environ.get("FDW_OUTPUT_DIR", get_default("FDW_OUTPUT_DIR")) or os.getcwd()
FDW_CSV_DIGITS = int(os.environ.get("FDW_CSV_DIGITS", get_default("FDW_CSV_DIGITS")))
FDW_SLOW_TESTS = os.environ.get("FDW_SLOW_TESTS", get_default("FDW_SLOW_TESTS")).lower() in ("1", "true", "yes")

DEFAULT_NMAX = int(os.environ.get("FDW_DEFAULT_NMAX", get_default("FDW_DEFAULT_NMAX")))
DEFAULT_COURANT = os.environ.get("FDW_DEFAULT_COURANT", get_default("FDW_DEFAULT_COURANT"))
PDE_T_FINAL = float(os.environ.get("FDW_PDE_T_FINAL", get_default("FDW_PDE_T_FINAL")))
TRACE_N = int(os.environ.get("FDW_TRACE_N", get_default("FDW_TRACE_N")))
