# -*- coding: utf-8 -*-
"""
Closed-form rational values of eps_j^n for the upwind boundary b = (1 + C, -C) under the
leap-frog bulk.

With x = 1/z the stable root is kappa_s = Q(x)/x, Q(x) = (sqrt(1 + t) + x^2 - 1)/(2C) and
t = 2(2C^2 - 1)x^2 + x^4, and the boundary row transforms to x/(1 - B(x)) with
B(x) = sum_r beta_r x^r. Hence

    eps_j^n = sum_k [x^{2k}] Q^j * [x^{n+j-1-2k}] 1/(1 - B),

the second factor summing beta products over all compositions of n + j - 1 - 2k (the empty
composition contributing 1 when that target is 0). Everything stays in Fractions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from errors import ValidationError
from schemes.model import BulkKind, BulkScheme, Number, to_fraction

_logger = logging.getLogger(__name__)

MAX_N = 20
MAX_R = 40
MAX_DENOMINATOR = 16


@dataclass(frozen=True)
class BetaSequence:
    courant: Fraction
    values: Tuple[Fraction, ...]

    def __getitem__(self, r: int) -> Fraction:
        """beta_r, 1-based."""
        if r < 1 or r > len(self.values):
            raise IndexError(r)
        return self.values[r - 1]

    def __len__(self) -> int:
        return len(self.values)


def gen_binom(a: Fraction, p: int) -> Fraction:
    """Generalised binomial coefficient (a choose p)."""
    out = Fraction(1)
    for i in range(p):
        out = out * (a - i) / (i + 1)
    return out


def _check_courant(courant: Number) -> Fraction:
    c = to_fraction(courant)
    if c == 0 or abs(c) >= 1:
        raise ValidationError("the rational oracle needs 0 < |C| < 1 (got %s)" % c)
    if c.denominator > MAX_DENOMINATOR:
        raise ValidationError("courant denominator %d exceeds %d" % (c.denominator, MAX_DENOMINATOR))
    return c


def beta_coeffs(courant: Number, r_max: int) -> BetaSequence:
    c = _check_courant(courant)
    if r_max < 1 or r_max > MAX_R:
        raise ValidationError("r_max must lie in 1..%d" % MAX_R)
    return _beta_coeffs(c, int(r_max))


@lru_cache(maxsize=64)
def _beta_coeffs(c: Fraction, r_max: int) -> BetaSequence:
    half = Fraction(1, 2)
    base = 2 * (2 * c * c - 1)
    values: List[Fraction] = []
    for m in range(1, r_max + 1):
        if m == 1:
            values.append(1 + c)
        elif m == 2:
            values.append(-c * c)
        elif m % 2:
            values.append(Fraction(0))
        else:
            r = m // 2
            total = Fraction(0)
            for p in range((r + 1) // 2, r + 1):
                total += gen_binom(half, p) * comb(p, r - p) * base ** (2 * p - r)
            values.append(-total / 2)
    return BetaSequence(courant=c, values=tuple(values))


@lru_cache(maxsize=4096)
def q_power_coefficient(c: Fraction, j: int, k: int) -> Fraction:
    """[x^{2k}] Q(x)^j by the triple binomial sum."""
    base = 2 * (2 * c * c - 1)
    total = Fraction(0)
    for ell in range(j + 1):
        for s in range(j - ell + 1):
            top = k - s
            if top < 0:
                continue
            for p in range((top + 1) // 2, top + 1):
                q = top - p
                if q > p:
                    continue
                sign = -1 if (j - ell - s) % 2 else 1
                total += (
                    sign
                    * comb(j, ell)
                    * comb(j - ell, s)
                    * gen_binom(Fraction(ell, 2), p)
                    * comb(p, q)
                    * base ** (2 * p - top)
                )
    return total / (2 * c) ** j


@lru_cache(maxsize=64)
def composition_sums(c: Fraction, m_max: int) -> Tuple[Fraction, ...]:
    """[x^m] 1/(1 - B) for m = 0..m_max, summing truncated convolution powers B^r."""
    betas = _beta_coeffs(c, max(1, m_max))
    poly = [Fraction(0)] + [betas[m] for m in range(1, m_max + 1)]
    sums = [Fraction(0)] * (m_max + 1)
    sums[0] = Fraction(1)
    power = list(poly)
    for _ in range(1, m_max + 1):
        for m in range(m_max + 1):
            sums[m] += power[m]
        nxt = [Fraction(0)] * (m_max + 1)
        for a, pa in enumerate(power):
            if pa == 0:
                continue
            for b in range(1, m_max + 1 - a):
                if poly[b]:
                    nxt[a + b] += pa * poly[b]
        power = nxt
    return tuple(sums)


def upwind_explicit(courant: Number, n: int, j: int) -> Fraction:
    """eps_j^n for the upwind boundary; n = 0 gives 0 and n = 1 reproduces the source eps_0^1 = 1."""
    c = _check_courant(courant)
    if int(n) != n or not 0 <= n <= MAX_N:
        raise ValidationError("n must lie in 0..%d" % MAX_N)
    if int(j) != j or not 0 <= j <= n:
        raise ValidationError("j must lie in 0..n")
    n, j = int(n), int(j)
    if n == 0:
        return Fraction(0)
    comps = composition_sums(c, max(n - 1, 1))
    total = Fraction(0)
    for k in range(j, (n + j - 1) // 2 + 1):
        m = n + j - 1 - 2 * k
        total += q_power_coefficient(c, j, k) * comps[m]
    return total


def upwind_table(courant: Number, n_max: int) -> Dict[Tuple[int, int], Fraction]:
    return {(n, j): upwind_explicit(courant, n, j) for n in range(int(n_max) + 1) for j in range(n + 1)}


def oracle_check(courant: Number, n_max: int = MAX_N) -> List[Tuple[int, int, Fraction, Fraction]]:
    """(n, j, explicit, recurrence) for every entry where the two exact values differ."""
    from schemes.library import upwind
    from schemes.simulate import simulate_error

    c = _check_courant(courant)
    bulk = BulkScheme(kind=BulkKind.LEAP_FROG, courant=c, allow_any_courant=True)
    run = simulate_error(bulk, upwind(c), n_max, exact=True)
    bad = []
    for (n, j), value in upwind_table(c, n_max).items():
        ref = run.row(n).values[j]
        if value != ref:
            bad.append((n, j, value, ref))
    if bad:
        _logger.warning("oracle mismatch at %d of the entries up to n=%d", len(bad), n_max)
    return bad
