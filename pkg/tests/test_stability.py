# -*- coding: utf-8 -*-
"""Tests for the boundary-scheme stability verdicts."""

import unittest
from fractions import Fraction

from errors import ValidationError
from schemes.library import dirichlet, glancing_instability, load_scheme_file, unstable_minus_one, upwind, upwind_diffusion
from schemes.model import BoundaryScheme, BulkKind, BulkScheme
from stability.classify import Verdict, classify, expected_unit_zeros

HALF = Fraction(1, 2)


def _leapfrog(c=-HALF):
    return BulkScheme(kind=BulkKind.LEAP_FROG, courant=c)


class TestClassify(unittest.TestCase):
    def test_upwind_stable(self):
        v = classify(upwind(-HALF), _leapfrog())
        self.assertEqual(v.verdict, Verdict.STABLE)
        self.assertEqual(v.zeros, [])
        self.assertEqual(v.winding, 2)

    def test_dirichlet_stable(self):
        v = classify(dirichlet(), _leapfrog())
        self.assertEqual(v.verdict, Verdict.STABLE)
        self.assertAlmostEqual(v.min_abs_d, 1.0)

    def test_sawtooth_boundary(self):
        v = classify(unstable_minus_one(-HALF), _leapfrog())
        self.assertEqual(v.verdict, Verdict.UNSTABLE_SIMPLE_ZERO)
        self.assertEqual(len(v.zeros), 1)
        self.assertAlmostEqual(v.zeros[0], -1.0)
        self.assertEqual(v.multiplicities, [1])

    def test_glancing_instability(self):
        bc = glancing_instability(-0.75, 9.0 / 16.0)
        self.assertAlmostEqual(float(bc.b[0]), 1.6)
        v = classify(bc, _leapfrog(Fraction(-3, 4)))
        self.assertEqual(v.verdict, Verdict.UNSTABLE_UNIT_CIRCLE_ZEROS)
        self.assertEqual(len(v.zeros), 2)
        for want in expected_unit_zeros(-0.75, 9.0 / 16.0):
            self.assertTrue(any(abs(z - want) < 1e-5 for z in v.zeros), (want, v.zeros))

    def test_expected_zeros(self):
        zs = expected_unit_zeros(-0.75, 9.0 / 16.0)
        self.assertAlmostEqual(zs[0], complex(0.8, 0.6))
        self.assertAlmostEqual(zs[1], complex(0.8, -0.6))

    def test_exterior_zero(self):
        # D = z^2 - 3z has its second zero at z = 3
        v = classify(BoundaryScheme(b=(3,)), _leapfrog())
        self.assertEqual(v.verdict, Verdict.GODUNOV_RYABENKII)
        self.assertEqual(v.winding, 1)
        self.assertEqual(len(v.zeros), 1)
        self.assertAlmostEqual(v.zeros[0], 3.0, places=6)

    def test_upwind_diffusion_stable(self):
        bc = upwind_diffusion(-HALF, Fraction(1, 4))
        for delta in (1e-2, 1e-3, 1e-4):
            v = classify(bc, _leapfrog(), delta=delta)
            self.assertEqual(v.verdict, Verdict.STABLE, delta)
            self.assertEqual(v.zeros, [], delta)
            self.assertEqual(v.winding, 2, delta)

    def test_verdicts_do_not_depend_on_delta(self):
        for bc in (upwind(-HALF), unstable_minus_one(-HALF), BoundaryScheme(b=(3,))):
            verdicts = {classify(bc, _leapfrog(), delta=d).verdict for d in (1e-2, 1e-3, 1e-4)}
            self.assertEqual(len(verdicts), 1, bc.name)

    def test_upwind_diffusion_file_matches_factory(self):
        from_file, _ = load_scheme_file("upwind_diffusion.json")
        built = upwind_diffusion(-HALF, Fraction(1, 4))
        self.assertEqual(from_file.b, built.b)
        self.assertEqual(from_file.bt, built.bt)
        self.assertEqual(classify(from_file, _leapfrog()).verdict, Verdict.STABLE)

    def test_to_json(self):
        payload = classify(unstable_minus_one(-HALF), _leapfrog()).to_json()
        self.assertEqual(payload["class"], "UnstableSimpleZero")
        self.assertEqual(payload["zeros"][0]["multiplicity"], 1)

    def test_bad_grid(self):
        with self.assertRaises(ValidationError):
            classify(upwind(-HALF), _leapfrog(), grid=4)

    def test_glancing_parameter_range(self):
        with self.assertRaises(ValidationError):
            glancing_instability(-0.5, 0.75)


if __name__ == "__main__":
    unittest.main()
