# -*- coding: utf-8 -*-
"""Airy Ai, its primitive, Chebyshev polynomials."""

from special_fn.airy import AiryEval, airy_ai, airy_eval, airy_primitive
from special_fn.chebyshev import chebyshev

__all__ = ["AiryEval", "airy_ai", "airy_eval", "airy_primitive", "chebyshev"]
