# -*- coding: utf-8 -*-
"""Zone predictors and long-time plateaus of the half-line error."""

from asymptotics.plateaus import l2_asymptote, lp_convergence_order, lp_exponent, moment_asymptote
from asymptotics.predictors import (
    Prediction,
    predict,
    predict_front,
    predict_gaussian,
    predict_near_wall,
    predict_transition,
)

__all__ = [
    "Prediction",
    "l2_asymptote",
    "lp_convergence_order",
    "lp_exponent",
    "moment_asymptote",
    "predict",
    "predict_front",
    "predict_gaussian",
    "predict_near_wall",
    "predict_transition",
]
