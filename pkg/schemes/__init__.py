# -*- coding: utf-8 -*-
"""Scheme definitions, half-line error simulation, PDE start-up demo, norms."""

from schemes.library import (
    check_order_constraints,
    lax_friedrichs_corner,
    load_scheme_file,
    named_boundary,
)
from schemes.model import BoundaryScheme, BulkKind, BulkScheme, CornerScheme, ErrorField, parse_number
from schemes.norms import empirical_order, lp_norm, moments
from schemes.simulate import ErrorRun, simulate_error

__all__ = [
    "BoundaryScheme",
    "BulkKind",
    "BulkScheme",
    "CornerScheme",
    "ErrorField",
    "ErrorRun",
    "check_order_constraints",
    "empirical_order",
    "lax_friedrichs_corner",
    "load_scheme_file",
    "lp_norm",
    "moments",
    "named_boundary",
    "parse_number",
    "simulate_error",
]
