# -*- coding: utf-8 -*-
"""Tests for scheme types, the half-line error recurrences, scheme files and norms."""

import json
import math
import os
import tempfile
import unittest
from fractions import Fraction

import numpy as np

from config import FDW_SLOW_TESTS
from errors import SchemeFileError, ValidationError
from schemes.library import (
    check_order_constraints,
    dirichlet,
    lax_friedrichs_corner,
    load_scheme_file,
    named_boundary,
    upwind,
)
from schemes.model import BoundaryScheme, BulkKind, BulkScheme, ErrorField, parse_number, to_fraction
from schemes.norms import empirical_order, lp_norm, moments
from schemes.pde import gaussian_datum, pde_order_study, simulate_pde
from schemes.simulate import manufactured_closed_form, simulate_error, support_violations

HALF = Fraction(1, 2)


def _leapfrog(c=-HALF):
    return BulkScheme(kind=BulkKind.LEAP_FROG, courant=c)


def _manufactured(c=HALF):
    return BulkScheme(kind=BulkKind.MANUFACTURED, courant=c)


def _field(values, **kw):
    base = {"time_index": 1, "values": np.array(values, dtype=float)}
    base.update(kw)
    return ErrorField(**base)


class TestParsing(unittest.TestCase):
    def test_fraction_string(self):
        self.assertEqual(parse_number("-1/2"), Fraction(-1, 2))

    def test_unicode_minus(self):
        self.assertEqual(parse_number("−3/4"), Fraction(-3, 4))

    def test_bool_rejected(self):
        with self.assertRaises(ValidationError):
            parse_number(True)

    def test_garbage_rejected(self):
        with self.assertRaises(ValidationError):
            parse_number("one half")

    def test_float_to_fraction_uses_repr(self):
        self.assertEqual(to_fraction(0.25), Fraction(1, 4))
        self.assertEqual(to_fraction(0.1), Fraction(1, 10))

    def test_bulk_aliases(self):
        self.assertEqual(BulkKind.parse("leap-frog"), BulkKind.LEAP_FROG)
        self.assertEqual(BulkKind.parse("omega"), BulkKind.DISSIPATIVE)
        self.assertEqual(BulkKind.parse("Manufactured"), BulkKind.MANUFACTURED)
        with self.assertRaises(ValidationError):
            BulkKind.parse("crank-nicolson")


class TestBulkScheme(unittest.TestCase):
    def test_leapfrog_needs_negative_courant(self):
        with self.assertRaises(ValidationError):
            BulkScheme(kind=BulkKind.LEAP_FROG, courant=HALF)

    def test_leapfrog_positive_courant_when_allowed(self):
        bulk = BulkScheme(kind=BulkKind.LEAP_FROG, courant=HALF, allow_any_courant=True)
        self.assertEqual(bulk.c, 0.5)

    def test_leapfrog_rejects_unit_courant(self):
        with self.assertRaises(ValidationError):
            BulkScheme(kind=BulkKind.LEAP_FROG, courant=-1, allow_any_courant=True)

    def test_dissipative_needs_omega(self):
        with self.assertRaises(ValidationError):
            BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF)

    def test_dissipative_omega_range(self):
        with self.assertRaises(ValidationError):
            BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF, omega=2)

    def test_manufactured_range(self):
        with self.assertRaises(ValidationError):
            _manufactured(Fraction(3, 2))

    def test_leapfrog_char_polys(self):
        a2, a1, a0 = _leapfrog().char_polys()
        self.assertEqual(list(a2), [0.0, -0.5, 0.0])
        self.assertEqual(list(a1), [-1.0, 0.0, 1.0])
        self.assertEqual(list(a0), [0.0, 0.5, 0.0])


class TestBoundaryScheme(unittest.TestCase):
    def test_trailing_zeros_trimmed(self):
        self.assertEqual(BoundaryScheme(b=(1, 0, 0)).b, (1,))

    def test_support_bound(self):
        with self.assertRaises(ValidationError):
            BoundaryScheme(b=[1] * 65)

    def test_dirichlet_is_empty(self):
        self.assertTrue(dirichlet().is_dirichlet())
        self.assertEqual(dirichlet().width, 1)

    def test_weighted_alternating_sums(self):
        bc = BoundaryScheme(b=(1, 2, 3))
        self.assertEqual(bc.sum_k("b"), 6.0)
        self.assertEqual(bc.sum_k("b", alternating=True), 2.0)
        self.assertEqual(bc.sum_k("b", weight=True), 8.0)

    def test_named_upwind(self):
        self.assertEqual(named_boundary("upwind", -HALF).b, (HALF, HALF))

    def test_named_unknown(self):
        with self.assertRaises(ValidationError):
            named_boundary("reflecting", -HALF)

    def test_named_needs_parameter(self):
        with self.assertRaises(ValidationError):
            named_boundary("upwind-diffusion", -HALF)

    def test_unstable_minus_one_trims_to_bt(self):
        bc = named_boundary("ex29", -HALF)
        self.assertEqual(bc.b, ())
        self.assertEqual(bc.bt, (0, 1))


class TestSchemeFiles(unittest.TestCase):
    def test_bundled_upwind(self):
        boundary, corner = load_scheme_file("upwind")
        self.assertEqual(boundary.b, (HALF, HALF))
        self.assertEqual(corner.c, (Fraction(1, 4), Fraction(3, 4)))
        self.assertEqual(corner.s_minus1, Fraction(1, 4))

    def test_bundled_without_corner(self):
        boundary, corner = load_scheme_file("ex29.json")
        self.assertIsNone(corner)
        self.assertEqual(boundary.bt, (0, 1))

    def test_missing_file(self):
        with self.assertRaises(SchemeFileError):
            load_scheme_file("no_such_scheme")

    def test_unknown_key(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bad.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"b": [1], "weights": [2]}, f)
            with self.assertRaises(SchemeFileError) as ctx:
                load_scheme_file(path)
        self.assertIn("weights", ctx.exception.reason)

    def test_bad_number(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bad.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"b": ["1/x"]}, f)
            with self.assertRaises(SchemeFileError):
                load_scheme_file(path)


class TestOrderConstraints(unittest.TestCase):
    def test_lax_friedrichs_with_upwind(self):
        flags = check_order_constraints(lax_friedrichs_corner(-HALF), upwind(-HALF), -HALF)
        self.assertEqual(set(flags.values()), {True})

    def test_dirichlet_breaks_boundary_consistency(self):
        flags = check_order_constraints(lax_friedrichs_corner(-HALF), dirichlet(), -HALF)
        self.assertFalse(flags["boundary_consistent"])
        self.assertTrue(flags["startup_first_moment"])


class TestSimulateError(unittest.TestCase):
    def test_initial_rows(self):
        run = simulate_error(_leapfrog(), upwind(-HALF), 3, exact=True)
        self.assertEqual(list(run.row(0).values), [0] * (run.j_max + 1))
        self.assertEqual(run.row(1).values[0], 1)
        self.assertEqual(sum(run.row(1).values[1:]), 0)

    def test_upwind_hand_values(self):
        run = simulate_error(_leapfrog(), upwind(-HALF), 3, exact=True)
        self.assertEqual(run.row(2).values[0], HALF)
        self.assertEqual(run.row(2).values[1], -HALF)
        self.assertEqual(run.row(3).values[0], 0)
        self.assertEqual(run.row(3).values[1], Fraction(-1, 4))
        self.assertEqual(run.row(3).values[2], Fraction(1, 4))

    def test_exact_matches_float(self):
        exact = simulate_error(_leapfrog(), upwind(-HALF), 40, exact=True)
        approx = simulate_error(_leapfrog(), upwind(-HALF), 40)
        diff = np.abs(exact.final.as_float() - approx.final.as_float())
        self.assertLess(float(np.max(diff)), 1e-12)

    def test_support_stays_behind_n(self):
        run = simulate_error(_leapfrog(), upwind(-HALF), 60)
        self.assertEqual(support_violations(run), [])

    def test_manufactured_closed_form(self):
        run = simulate_error(_manufactured(), dirichlet(), 14, exact=True)
        for fld in run:
            if fld.time_index < 2:
                continue
            for j, v in enumerate(fld.values):
                self.assertEqual(v, manufactured_closed_form(HALF, fld.time_index, j), (fld.time_index, j))

    def test_manufactured_row_four(self):
        self.assertEqual(manufactured_closed_form(HALF, 4, 2), Fraction(1, 4))

    def test_dissipative_runs(self):
        bulk = BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF, omega=Fraction(3, 2))
        run = simulate_error(bulk, dirichlet(), 50, snapshots=())
        self.assertTrue(np.all(np.isfinite(run.final.as_float())))

    def test_narrow_window_rejected(self):
        with self.assertRaises(ValidationError):
            simulate_error(_leapfrog(), upwind(-HALF), 20, 10)

    def test_truncated_window(self):
        run = simulate_error(_leapfrog(), upwind(-HALF), 20, 10, truncate=True, snapshots=())
        self.assertEqual(len(run.final), 11)

    def test_snapshots_and_traces(self):
        run = simulate_error(_leapfrog(), upwind(-HALF), 10, snapshots=(2, 5), traces=(0,))
        self.assertEqual(sorted(run.fields), [2, 5, 10])
        self.assertEqual(run.traces[0][2], run.row(2).values[0])
        with self.assertRaises(KeyError):
            run.row(3)

    def test_source_scales_linearly(self):
        one = simulate_error(_leapfrog(), upwind(-HALF), 12, exact=True)
        three = simulate_error(_leapfrog(), upwind(-HALF), 12, exact=True, source=3)
        self.assertEqual(list(three.final.values), [3 * v for v in one.final.values])


class TestNorms(unittest.TestCase):
    def test_lp(self):
        fld = _field([3.0, -4.0])
        self.assertAlmostEqual(lp_norm(fld, 2), 5.0)
        self.assertAlmostEqual(lp_norm(fld, 1), 7.0)
        self.assertAlmostEqual(lp_norm(fld, "inf"), 4.0)

    def test_scaled(self):
        fld = _field([3.0, -4.0], dx=0.25)
        self.assertAlmostEqual(lp_norm(fld, 2, scaled=True), 2.5)

    def test_scaled_needs_dx(self):
        with self.assertRaises(ValidationError):
            lp_norm(_field([1.0]), 2, scaled=True)

    def test_p_below_one(self):
        with self.assertRaises(ValidationError):
            lp_norm(_field([1.0]), 0.5)

    def test_moments(self):
        fld = _field([1.0, 2.0, 3.0])
        self.assertEqual(moments(fld, 0), 6.0)
        self.assertEqual(moments(fld, 1), 8.0)
        self.assertEqual(moments(fld, 0, alternating=True), 2.0)

    def test_exact_moments(self):
        fld = ErrorField(time_index=2, values=np.array([HALF, -HALF, Fraction(0)], dtype=object))
        self.assertEqual(moments(fld, 1), -HALF)

    def test_empirical_order(self):
        self.assertAlmostEqual(empirical_order([1.0, 0.5, 0.25], [1.0, 0.25, 0.0625]), 2.0)


class TestPde(unittest.TestCase):
    def test_zero_error_at_start(self):
        run = simulate_pde(upwind(-0.5), lax_friedrichs_corner(-0.5), gaussian_datum, 0.01, -0.5, 0.1)
        self.assertEqual(run.n_steps, 20)
        self.assertEqual(float(np.max(np.abs(run.e_fields[0].values))), 0.0)
        self.assertTrue(all(run.meta["orders"].values()))

    def test_positive_courant_rejected(self):
        with self.assertRaises(ValidationError):
            simulate_pde(upwind(0.5), lax_friedrichs_corner(0.5), gaussian_datum, 0.01, 0.5, 0.1)

    def test_error_shrinks_with_dx(self):
        study = pde_order_study(upwind(-0.5), lax_friedrichs_corner(-0.5), [0.01, 0.005], -0.5, 0.4)
        self.assertLess(study.norms[1], study.norms[0])

    @unittest.skipUnless(FDW_SLOW_TESTS, "set FDW_SLOW_TESTS=1 for long runs")
    def test_order_three_halves(self):
        dxs = [1.0 / 1000, 1.0 / 2000, 1.0 / 4000]
        study = pde_order_study(upwind(-0.5), lax_friedrichs_corner(-0.5), dxs, -0.5, 1.6)
        self.assertTrue(math.isclose(study.order, 1.5, abs_tol=0.1), study.order)


if __name__ == "__main__":
    unittest.main()
