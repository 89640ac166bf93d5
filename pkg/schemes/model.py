# -*- coding: utf-8 -*-
"""
Scheme data types: bulk update rule, boundary and corner coefficient sequences, error fields.
Coefficients keep the numeric type they were given (float, int or Fraction) so the same
objects drive both the floating-point and the exact rational simulations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from config import numerics_config
from errors import ValidationError

Number = Union[int, float, Fraction]


class BulkKind(str, Enum):
    LEAP_FROG = "LeapFrog"
    DISSIPATIVE = "Dissipative"
    MANUFACTURED = "ManufacturedDissipative"

    @classmethod
    def parse(cls, text: str) -> "BulkKind":
        key = (text or "").strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "leapfrog": cls.LEAP_FROG,
            "lf": cls.LEAP_FROG,
            "dissipative": cls.DISSIPATIVE,
            "omega": cls.DISSIPATIVE,
            "manufactured": cls.MANUFACTURED,
            "manufactureddissipative": cls.MANUFACTURED,
        }
        if key not in aliases:
            raise ValidationError("unknown bulk scheme %r (leapfrog, dissipative, manufactured)" % (text,))
        return aliases[key]


def parse_number(value: Any) -> Number:
    """Parse "p/q", decimal strings, ints, floats and Fractions; strings become exact Fractions."""
    if isinstance(value, bool):
        raise ValidationError("boolean is not a number: %r" % (value,))
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, float):
        if not np.isfinite(value):
            raise ValidationError("non-finite number %r" % (value,))
        return value
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValidationError("cannot parse number %r" % (value,))
    raise ValidationError("unsupported number type %s" % type(value).__name__)


def to_fraction(value: Number) -> Fraction:
    """Exact rational for value; floats go through their shortest repr (0.25 -> 1/4)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(parse_number(value))


@dataclass(frozen=True)
class BulkScheme:
    """Interior update rule and its Courant number (omega only for the dissipative rule)."""

    kind: BulkKind
    courant: Number
    omega: Optional[Number] = None
    allow_any_courant: bool = False

    def __post_init__(self):
        c = float(self.courant)
        if self.kind == BulkKind.LEAP_FROG:
            if not self.allow_any_courant and not (-1.0 < c < 0.0):
                raise ValidationError("leap-frog requires -1 < courant < 0 (got %s)" % (self.courant,))
            if not (-1.0 < c < 1.0) or c == 0.0:
                raise ValidationError("leap-frog requires 0 < |courant| < 1 (got %s)" % (self.courant,))
        elif self.kind == BulkKind.DISSIPATIVE:
            if self.omega is None:
                raise ValidationError("dissipative bulk needs omega")
            w = float(self.omega)
            if not (0.0 < w < 2.0):
                raise ValidationError("omega must lie in (0, 2) (got %s)" % (self.omega,))
            if not (0.0 < c <= 1.0):
                raise ValidationError("dissipative bulk requires 0 < courant <= 1 (got %s)" % (self.courant,))
        elif self.kind == BulkKind.MANUFACTURED:
            if not (0.0 < c < 1.0):
                raise ValidationError("manufactured bulk requires 0 < courant < 1 (got %s)" % (self.courant,))

    @property
    def c(self) -> float:
        return float(self.courant)

    @property
    def w(self) -> float:
        return float(self.omega) if self.omega is not None else float("nan")

    def char_polys(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Coefficients (in z, low to high degree) of a2, a1, a0 in the characteristic
        quadratic a2(z) k^2 + a1(z) k + a0(z) = 0 of the spatial root k.
        """
        c = self.c
        if self.kind == BulkKind.LEAP_FROG:
            return (np.array([0.0, c, 0.0]), np.array([-1.0, 0.0, 1.0]), np.array([0.0, -c, 0.0]))
        if self.kind == BulkKind.DISSIPATIVE:
            w = self.w
            return (
                np.array([0.0, 0.5 * (w - 2.0) + 0.5 * w * c, 0.0]),
                np.array([1.0 - w, 0.0, 1.0]),
                np.array([0.0, 0.5 * (w - 2.0) - 0.5 * w * c, 0.0]),
            )
        q = c * (1.0 - c)
        return (np.array([q, -c, 0.0]), np.array([1.0 - 2.0 * q, 0.0, -1.0]), np.array([q, c, 0.0]))

    def describe(self) -> Dict[str, Any]:
        out = {"kind": self.kind.value, "courant": str(self.courant)}
        if self.omega is not None:
            out["omega"] = str(self.omega)
        return out


def _as_tuple(values: Optional[Sequence[Any]], name: str) -> Tuple[Number, ...]:
    if values is None:
        return ()
    out = tuple(parse_number(v) for v in values)
    limit = numerics_config.get_max_support()
    if len(out) > limit:
        raise ValidationError("%s has support %d > %d" % (name, len(out), limit))
    while out and out[-1] == 0:
        out = out[:-1]
    return out


@dataclass(frozen=True)
class BoundaryScheme:
    """eps_0^{n+1} = sum_k b_k eps_k^n + sum_k bt_k eps_k^{n-1}."""

    b: Tuple[Number, ...] = ()
    bt: Tuple[Number, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "b", _as_tuple(self.b, "b"))
        object.__setattr__(self, "bt", _as_tuple(self.bt, "bt"))

    @property
    def width(self) -> int:
        return max(len(self.b), len(self.bt), 1)

    def b_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.b] or [0.0])

    def bt_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.bt] or [0.0])

    def sum_b(self) -> float:
        return float(sum(self.b))

    def sum_bt(self) -> float:
        return float(sum(self.bt))

    def sum_k(self, seq: str, alternating: bool = False, weight: bool = False) -> float:
        """sum_k k^weight (-1)^(k alternating) seq_k for seq in {"b", "bt"}."""
        values = self.b if seq == "b" else self.bt
        total = 0.0
        for k, v in enumerate(values):
            term = float(v)
            if weight:
                term *= k
            if alternating and k % 2:
                term = -term
            total += term
        return total

    def is_dirichlet(self) -> bool:
        return not self.b and not self.bt

    def to_json(self) -> Dict[str, Any]:
        return {"b": [_json_number(x) for x in self.b], "bt": [_json_number(x) for x in self.bt]}


@dataclass(frozen=True)
class CornerScheme:
    """Start-up coefficients: u_0^1 = sum_k c_k u_k^0 and u_j^1 = sum_{k>=-1} s_k u_{j+k}^0."""

    c: Tuple[Number, ...] = (1,)
    s_minus1: Number = 0
    s: Tuple[Number, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "c", _as_tuple(self.c, "c"))
        object.__setattr__(self, "s", _as_tuple(self.s, "s"))
        object.__setattr__(self, "s_minus1", parse_number(self.s_minus1))
        if len(self.s) + 1 > numerics_config.get_max_support():
            raise ValidationError("s has support %d > %d" % (len(self.s) + 1, numerics_config.get_max_support()))

    def s_items(self):
        """(k, s_k) for k = -1..K, s_0 included even when zero."""
        yield -1, self.s_minus1
        for k, v in enumerate(self.s):
            yield k, v

    def to_json(self) -> Dict[str, Any]:
        return {
            "c": [_json_number(x) for x in self.c],
            "s_minus1": _json_number(self.s_minus1),
            "s": [_json_number(x) for x in self.s],
        }


def _json_number(x: Number):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


@dataclass
class ErrorField:
    """One time row of a two-index field; values[i] is the entry at j = j_start + i."""

    time_index: int
    values: np.ndarray
    dx: Optional[float] = None
    j_start: int = 0
    meta: Dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def j(self) -> np.ndarray:
        return np.arange(self.j_start, self.j_start + len(self.values))

    def at(self, j: int):
        i = j - self.j_start
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def as_float(self) -> np.ndarray:
        if self.values.dtype == object:
            return np.array([float(v) for v in self.values])
        return np.asarray(self.values, dtype=float)
