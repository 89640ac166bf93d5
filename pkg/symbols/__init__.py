# -*- coding: utf-8 -*-
"""Complex-variable layer: kappa_s, phase, branch and saddle points, boundary determinant."""

from symbols.boundary_fn import boundary_determinant, check_simple_zero_minus_one, g_eval, residue_R
from symbols.branch import branch_points
from symbols.phase import SaddlePointSet, Zone, f_eval, saddle_points, transition_sigma
from symbols.roots import kappa_s, kappa_s_array

__all__ = [
    "SaddlePointSet",
    "Zone",
    "boundary_determinant",
    "branch_points",
    "check_simple_zero_minus_one",
    "f_eval",
    "g_eval",
    "kappa_s",
    "kappa_s_array",
    "residue_R",
    "saddle_points",
    "transition_sigma",
]
