# -*- coding: utf-8 -*-
"""Exact rational oracles."""

from oracle.rational import BetaSequence, beta_coeffs, oracle_check, upwind_explicit, upwind_table

__all__ = ["BetaSequence", "beta_coeffs", "oracle_check", "upwind_explicit", "upwind_table"]
