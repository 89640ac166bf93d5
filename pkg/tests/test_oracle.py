# -*- coding: utf-8 -*-
"""Tests for the rational explicit formula of the upwind error."""

import unittest
from fractions import Fraction

from errors import ValidationError
from oracle.rational import (
    MAX_N,
    beta_coeffs,
    composition_sums,
    gen_binom,
    oracle_check,
    q_power_coefficient,
    upwind_explicit,
    upwind_table,
)

HALF = Fraction(1, 2)


class TestBeta(unittest.TestCase):
    def test_first_terms(self):
        betas = beta_coeffs(-HALF, 6)
        self.assertEqual(betas[1], HALF)
        self.assertEqual(betas[2], Fraction(-1, 4))
        self.assertEqual(betas[3], 0)
        self.assertEqual(betas[5], 0)
        self.assertEqual(len(betas), 6)

    def test_one_based(self):
        with self.assertRaises(IndexError):
            beta_coeffs(-HALF, 3)[0]

    def test_r_max_range(self):
        with self.assertRaises(ValidationError):
            beta_coeffs(-HALF, 41)

    def test_gen_binom(self):
        self.assertEqual(gen_binom(HALF, 2), Fraction(-1, 8))
        self.assertEqual(gen_binom(Fraction(3), 2), 3)

    def test_q_power_start(self):
        # Q(x) = C x^2 + ...: [x^0] Q^j vanishes for j >= 1 and [x^2] Q = C
        c = -HALF
        self.assertEqual(q_power_coefficient(c, 0, 0), 1)
        self.assertEqual(q_power_coefficient(c, 1, 0), 0)
        self.assertEqual(q_power_coefficient(c, 1, 1), c)

    def test_composition_sums_start(self):
        sums = composition_sums(-HALF, 2)
        self.assertEqual(sums[0], 1)
        self.assertEqual(sums[1], HALF)
        # beta_2 + beta_1^2
        self.assertEqual(sums[2], Fraction(-1, 4) + Fraction(1, 4))


class TestExplicit(unittest.TestCase):
    def test_hand_values(self):
        c = -HALF
        self.assertEqual(upwind_explicit(c, 0, 0), 0)
        self.assertEqual(upwind_explicit(c, 1, 0), 1)
        self.assertEqual(upwind_explicit(c, 2, 0), 1 + c)
        self.assertEqual(upwind_explicit(c, 2, 1), c)
        self.assertEqual(upwind_explicit(c, 3, 0), (1 + c) ** 2 - c * c)
        self.assertEqual(upwind_explicit(c, 3, 1), Fraction(-1, 4))
        self.assertEqual(upwind_explicit(c, 3, 2), Fraction(1, 4))

    def test_other_courant(self):
        c = Fraction(-3, 4)
        self.assertEqual(upwind_explicit(c, 2, 0), Fraction(1, 4))
        self.assertEqual(upwind_explicit(c, 2, 1), c)

    def test_table_shape(self):
        table = upwind_table(-HALF, 5)
        self.assertEqual(len(table), 21)
        self.assertEqual(table[(1, 0)], 1)

    def test_ranges(self):
        with self.assertRaises(ValidationError):
            upwind_explicit(-HALF, MAX_N + 1, 0)
        with self.assertRaises(ValidationError):
            upwind_explicit(-HALF, 3, 4)
        with self.assertRaises(ValidationError):
            upwind_explicit(Fraction(-1, 17), 3, 0)
        with self.assertRaises(ValidationError):
            upwind_explicit(-1, 3, 0)


class TestOracleCheck(unittest.TestCase):
    def test_half(self):
        self.assertEqual(oracle_check(-HALF), [])

    def test_three_quarters(self):
        self.assertEqual(oracle_check(Fraction(-3, 4)), [])


if __name__ == "__main__":
    unittest.main()
