# -*- coding: utf-8 -*-
"""Green functions of the leap-frog scheme on the whole lattice."""

from green.fourier import FourierSymbolEval, compare_chebyshev, green_fourier, green_inverse, green_symbol_points
from green.predict import (
    Front,
    GreenSaddle,
    TraceDivergence,
    green_energy_bound,
    green_front_predict,
    green_l2_limit,
    green_saddle_points,
    green_trace_asymptotic,
    green_transition_predict,
    trace_companion_partial_sums,
    trace_divergence,
)
from green.simulate import GreenField, GreenKind, green_l2_series, green_simulate

__all__ = [
    "FourierSymbolEval",
    "Front",
    "GreenField",
    "GreenKind",
    "GreenSaddle",
    "TraceDivergence",
    "compare_chebyshev",
    "green_energy_bound",
    "green_fourier",
    "green_front_predict",
    "green_inverse",
    "green_l2_limit",
    "green_l2_series",
    "green_saddle_points",
    "green_simulate",
    "green_symbol_points",
    "green_trace_asymptotic",
    "green_transition_predict",
    "trace_companion_partial_sums",
    "trace_divergence",
]
