# -*- coding: utf-8 -*-
"""Tests for the zone predictors against the simulated error recurrence."""

import math
import random
import unittest
from fractions import Fraction

from config import FDW_SLOW_TESTS, numerics_config
from errors import ValidationError
from asymptotics.predictors import (
    UNSTABLE,
    front_scale,
    gaussian_variance,
    is_upwind,
    near_wall_stable_value,
    near_wall_upwind_value,
    predict,
    predict_front,
    predict_gaussian,
    predict_near_wall,
    predict_transition,
    zone_of,
)
from schemes.library import dirichlet, unstable_minus_one, upwind, upwind_diffusion
from schemes.model import BulkKind, BulkScheme
from schemes.simulate import manufactured_closed_form, simulate_error
from symbols.phase import Zone

HALF = Fraction(1, 2)


def _leapfrog(c=-HALF):
    return BulkScheme(kind=BulkKind.LEAP_FROG, courant=c)


def _final_row(boundary, n, bulk=None):
    return simulate_error(bulk or _leapfrog(), boundary, n, snapshots=()).final.as_float()


class TestZones(unittest.TestCase):
    def test_zone_of(self):
        bulk = _leapfrog()
        self.assertEqual(zone_of(bulk, 1000, 5), Zone.NEAR_WALL)
        self.assertEqual(zone_of(bulk, 1000, 250), Zone.TRANSITION)
        self.assertEqual(zone_of(bulk, 1000, 500), Zone.FRONT)
        self.assertEqual(zone_of(bulk, 1000, 900), Zone.AHEAD)

    def test_near_wall_index_cutoff(self):
        bulk = _leapfrog()
        cutoff = numerics_config.get_near_wall_max_j()
        self.assertEqual(cutoff, 20)
        # j/n is past the transition margin on both sides of the cutoff
        self.assertEqual(zone_of(bulk, 10000, cutoff), Zone.NEAR_WALL)
        self.assertEqual(zone_of(bulk, 10000, cutoff + 1), Zone.TRANSITION)

    def test_zone_windows_from_config(self):
        self.assertEqual(numerics_config.get_transition_margin(), 1e-3)
        self.assertEqual(numerics_config.get_front_halfwidth(), 10.0)
        bulk = _leapfrog()
        # front half-width at n = 1000 is 100 sites
        self.assertEqual(zone_of(bulk, 1000, 398), Zone.TRANSITION)
        self.assertEqual(zone_of(bulk, 1000, 402), Zone.FRONT)
        self.assertEqual(zone_of(bulk, 1000, 598), Zone.FRONT)
        self.assertEqual(zone_of(bulk, 1000, 602), Zone.AHEAD)

    def test_dissipative_zone(self):
        bulk = BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF, omega=Fraction(3, 2))
        self.assertEqual(zone_of(bulk, 100, 50), Zone.GAUSSIAN_PEAK)

    def test_no_predictor_ahead(self):
        with self.assertRaises(ValidationError):
            predict(upwind(-HALF), _leapfrog(), 1000, 900)

    def test_is_upwind(self):
        self.assertTrue(is_upwind(upwind(-HALF), -0.5))
        self.assertFalse(is_upwind(dirichlet(), -0.5))

    def test_front_scale(self):
        self.assertAlmostEqual(front_scale(-0.5, 4000), 750.0 ** (1.0 / 3.0))


class TestNearWall(unittest.TestCase):
    def test_upwind_against_simulation(self):
        n = 2000
        row = _final_row(upwind(-HALF), n)
        for j in range(4):
            pred = predict_near_wall(upwind(-HALF), _leapfrog(), n, j)
            self.assertEqual(pred.zone, Zone.NEAR_WALL)
            self.assertLess(abs(row[j] - pred.value), 0.1 * n ** -1.5, j)

    def test_upwind_specialisation_reported(self):
        pred = predict_near_wall(upwind(-HALF), _leapfrog(), 2000, 1)
        self.assertIn("upwind_value", pred.diagnostics)

    def test_small_n_rejected(self):
        with self.assertRaises(ValidationError):
            predict_near_wall(upwind(-HALF), _leapfrog(), 5, 0)

    def test_sawtooth_plateau(self):
        bc = unstable_minus_one(-HALF)
        for n in (1000, 1001):
            row = _final_row(bc, n)
            pred = predict_near_wall(bc, _leapfrog(), n, 0, mode=UNSTABLE)
            self.assertEqual(pred.diagnostics["R"], -0.25)
            self.assertAlmostEqual(pred.value, (-1) ** n * -0.25, delta=1e-3)
            self.assertLess(abs(row[0] - pred.value), 1e-2)

    def test_upwind_closed_form_matches_general_expansion(self):
        rng = random.Random(20240611)
        bc = upwind(-HALF)
        for _ in range(50):
            n = rng.randint(10, 10000)
            j = rng.randint(0, 20)
            general, _ = near_wall_stable_value(bc, -0.5, n, j)
            self.assertAlmostEqual(general, near_wall_upwind_value(-0.5, n, j), delta=1e-12, msg=(n, j))


class TestUnstableLongRun(unittest.TestCase):
    """One run of the z = -1 boundary to n = 20000; rows at 10^4 and 2 10^4."""

    @classmethod
    def setUpClass(cls):
        cls.bc = unstable_minus_one(-HALF)
        cls.ns = (10000, 20000)
        cls.err_run = simulate_error(_leapfrog(), cls.bc, cls.ns[-1], snapshots=cls.ns)

    def test_sawtooth_plateau_converges(self):
        errs = []
        for n in self.ns:
            row = self.err_run.row(n).as_float()
            errs.append(abs(row[0] - (-1) ** n * -0.25))
        self.assertLess(errs[0], 1e-3)
        self.assertLess(errs[1], errs[0])

    def test_front_converges(self):
        errs = []
        for n in self.ns:
            j = n // 2
            row = self.err_run.row(n).as_float()
            pred = predict_front(self.bc, _leapfrog(), n, j, mode=UNSTABLE)
            self.assertAlmostEqual(pred.value, (-1) ** (n + 1) / 12.0, delta=1e-9)
            errs.append(abs(row[j] - pred.value))
        self.assertLess(errs[0], 0.2 / 12.0)
        self.assertLess(errs[1], errs[0])


class TestTransition(unittest.TestCase):
    def test_upwind_against_simulation(self):
        n = 4000
        row = _final_row(upwind(-HALF), n)
        for j in (1000, 1001, 600):
            pred = predict_transition(upwind(-HALF), _leapfrog(), n, j)
            self.assertLess(abs(row[j] - pred.value), 0.05 * n ** -0.5, j)

    def test_outside_transition(self):
        with self.assertRaises(ValidationError):
            predict_transition(upwind(-HALF), _leapfrog(), 1000, 600)

    def test_mode_name(self):
        with self.assertRaises(ValidationError):
            predict_transition(upwind(-HALF), _leapfrog(), 1000, 250, mode="marginal")


class TestFront(unittest.TestCase):
    def test_upwind_against_simulation(self):
        n = 4000
        row = _final_row(upwind(-HALF), n)
        w = front_scale(-0.5, n)
        for j in range(1995, 2006):
            pred = predict_front(upwind(-HALF), _leapfrog(), n, j)
            self.assertLess(abs(row[j] - pred.value), 0.2 / w, j)

    def test_unstable_value_on_the_front(self):
        bc = unstable_minus_one(-HALF)
        self.assertAlmostEqual(predict_front(bc, _leapfrog(), 1000, 500, mode=UNSTABLE).value, -1.0 / 12.0)
        self.assertAlmostEqual(predict_front(bc, _leapfrog(), 1001, 500, mode=UNSTABLE).value, 1.0 / 12.0, delta=0.02)

    def test_unstable_plateau_behind_front(self):
        bc = unstable_minus_one(-HALF)
        pred = predict_front(bc, _leapfrog(), 8000, 3900, mode=UNSTABLE)
        self.assertAlmostEqual(pred.value, -0.25, delta=0.05)

    def test_stable_mode_needs_nonzero_determinant(self):
        with self.assertRaises(ValidationError):
            predict_front(unstable_minus_one(-HALF), _leapfrog(), 1000, 500)

    def test_far_from_front(self):
        with self.assertRaises(ValidationError):
            predict_front(upwind(-HALF), _leapfrog(), 1000, 100)

    def test_agrees_with_transition_where_both_apply(self):
        n = 10000
        j0 = round(n * (0.5 - 5.0 * n ** (-2.0 / 3.0)))
        # one slow Airy period fits in the window
        window = range(j0 - 15, j0 + 16)
        bc = upwind(-HALF)
        transition = max(abs(predict_transition(bc, _leapfrog(), n, j).value) for j in window)
        front = max(abs(predict_front(bc, _leapfrog(), n, j).value) for j in window)
        self.assertGreater(front, 0.0)
        self.assertTrue(1.0 / 3.0 <= transition / front <= 3.0, transition / front)


class TestFrontRate(unittest.TestCase):
    """Upwind with numerical diffusion 1/4: the front remainder decays like n^(-2/3)."""

    @classmethod
    def setUpClass(cls):
        cls.bc = upwind_diffusion(-HALF, Fraction(1, 4))
        cls.ns = (2000, 4000, 8000)
        cls.err_run = simulate_error(_leapfrog(), cls.bc, cls.ns[-1], snapshots=cls.ns)

    def test_scaled_remainder_is_flat(self):
        scaled = []
        for n in self.ns:
            row = self.err_run.row(n).as_float()
            err = max(
                abs(row[j] - predict_front(self.bc, _leapfrog(), n, j).value)
                for j in range(n // 2 - 5, n // 2 + 6)
            )
            scaled.append(err * n ** (2.0 / 3.0))
        self.assertLess(max(scaled), 0.2, scaled)
        self.assertLess(max(scaled) / min(scaled), 1.5, scaled)


class TestGaussian(unittest.TestCase):
    def test_dissipative_width(self):
        bulk = BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF, omega=Fraction(3, 2))
        self.assertAlmostEqual(math.sqrt(gaussian_variance(bulk, 10000)), 50.0)

    def test_manufactured_peak(self):
        bulk = BulkScheme(kind=BulkKind.MANUFACTURED, courant=HALF)
        n, j = 400, 200
        exact = float(manufactured_closed_form(HALF, n, j))
        pred = predict_gaussian(dirichlet(), bulk, n, j)
        self.assertEqual(pred.zone, Zone.GAUSSIAN_PEAK)
        self.assertAlmostEqual(pred.value / exact, 1.0, delta=1e-2)

    def test_manufactured_needs_dirichlet(self):
        bulk = BulkScheme(kind=BulkKind.MANUFACTURED, courant=HALF)
        with self.assertRaises(ValidationError):
            predict_gaussian(upwind(HALF), bulk, 400, 200)

    def test_leapfrog_rejected(self):
        with self.assertRaises(ValidationError):
            predict_gaussian(upwind(-HALF), _leapfrog(), 400, 200)

    def test_dissipative_against_simulation(self):
        bulk = BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF, omega=Fraction(3, 2))
        n = 2000
        row = _final_row(dirichlet(), n, bulk)
        # n + j even cancels the bracket for the Dirichlet boundary
        self.assertEqual(predict_gaussian(dirichlet(), bulk, n, 1000).value, 0.0)
        peak = predict_gaussian(dirichlet(), bulk, n, 1001).value
        for j in (990, 1000, 1001, 1030):
            pred = predict_gaussian(dirichlet(), bulk, n, j)
            self.assertLess(abs(row[j] - pred.value), 0.05 * abs(peak), j)

    def test_dissipative_whole_peak(self):
        n = 10000
        half = int(10 * math.sqrt(n))
        for omega, tol in ((Fraction(3, 2), 0.10), (Fraction(9, 5), 0.25)):
            bulk = BulkScheme(kind=BulkKind.DISSIPATIVE, courant=HALF, omega=omega)
            row = _final_row(dirichlet(), n, bulk)
            peak = range(n // 2 - half + 1, n // 2 + half)
            preds = [predict_gaussian(dirichlet(), bulk, n, j).value for j in peak]
            worst = max(abs(row[j] - p) for j, p in zip(peak, preds))
            self.assertLess(worst, tol * max(abs(p) for p in preds), omega)


@unittest.skipUnless(FDW_SLOW_TESTS, "set FDW_SLOW_TESTS=1 for long runs")
class TestRemainderRates(unittest.TestCase):
    def _scaled_errors(self, zone_points, rate, ns=(2500, 10000)):
        out = []
        for n in ns:
            row = _final_row(upwind(-HALF), n)
            err = max(abs(row[j] - predict(upwind(-HALF), _leapfrog(), n, j).value) for j in zone_points(n))
            out.append(err * n ** rate)
        return out

    def test_near_wall_rate(self):
        small, large = self._scaled_errors(lambda n: range(4), 2.5)
        self.assertLess(large, 4.0 * small)

    def test_transition_rate(self):
        small, large = self._scaled_errors(lambda n: [n // 4, n // 4 + 1], 1.5)
        self.assertLess(large, 4.0 * small)


if __name__ == "__main__":
    unittest.main()
