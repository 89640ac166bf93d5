# -*- coding: utf-8 -*-
"""Boundary-scheme stability classification."""

from stability.classify import StabilityVerdict, Verdict, classify, expected_unit_zeros

__all__ = ["StabilityVerdict", "Verdict", "classify", "expected_unit_zeros"]
