# -*- coding: utf-8 -*-
"""End-to-end tests of the fdw command line through app.run."""

import io
import json
import unittest

import app


def _run(*argv):
    out = io.StringIO()
    code = app.run(list(argv), out=out)
    return code, out.getvalue()


class TestCli(unittest.TestCase):
    def test_simulate_manufactured(self):
        code, text = _run("simulate", "--bulk", "manufactured", "--courant", "1/2", "--nmax", "4")
        self.assertEqual(code, app.EXIT_OK)
        lines = text.splitlines()
        self.assertEqual(lines[0], "n,j,value")
        self.assertIn("4,2,0.25", lines)

    def test_simulate_exact_prints_fractions(self):
        code, text = _run("simulate", "--bulk", "manufactured", "--courant", "1/2", "--nmax", "4", "--exact")
        self.assertEqual(code, app.EXIT_OK)
        self.assertIn("4,2,1/4", text.splitlines())

    def test_stability_from_file(self):
        code, text = _run("stability", "--boundary", "ex29.json", "--format", "json")
        self.assertEqual(code, app.EXIT_OK)
        self.assertEqual(json.loads(text)["class"], "UnstableSimpleZero")

    def test_bad_flag(self):
        code, _ = _run("simulate", "--no-such-flag")
        self.assertEqual(code, app.EXIT_VALIDATION)

    def test_leapfrog_positive_courant(self):
        code, _ = _run("simulate", "--courant", "1/2", "--nmax", "4")
        self.assertEqual(code, app.EXIT_VALIDATION)

    def test_missing_scheme_file(self):
        code, _ = _run("stability", "--boundary", "no_such_scheme.json")
        self.assertEqual(code, app.EXIT_VALIDATION)

    def test_oracle_check(self):
        code, text = _run("oracle-check", "--nmax", "8")
        self.assertEqual(code, app.EXIT_OK)
        payload = json.loads(text)
        self.assertEqual(payload["mismatches"], [])
        self.assertEqual(payload["checked"], 45)

    def test_l2_dirichlet(self):
        code, text = _run("l2", "--boundary", "dirichlet")
        self.assertEqual(code, app.EXIT_OK)
        payload = json.loads(text)
        self.assertAlmostEqual(payload["l2_asymptote"], payload["closed_form"], places=7)

    def test_lp_scan(self):
        code, text = _run("lp-scan", "--p-values", "2")
        self.assertEqual(code, app.EXIT_OK)
        self.assertEqual(text.splitlines()[1], "2,0,transition,1.5,")

    def test_xlsx_needs_output(self):
        code, _ = _run("lp-scan", "--format", "xlsx")
        self.assertEqual(code, app.EXIT_VALIDATION)

    def test_trace_too_short(self):
        code, _ = _run("trace", "--nmax", "500")
        self.assertEqual(code, app.EXIT_VALIDATION)

    def test_green_json(self):
        code, text = _run("green", "--nmax", "4", "--format", "json")
        self.assertEqual(code, app.EXIT_OK)
        payload = json.loads(text)
        self.assertEqual(payload["columns"], ["n", "j", "value"])
        self.assertTrue(all(row[0] == 4 for row in payload["rows"]))
        self.assertGreater(payload["l2_limit"], 0.0)

    def test_negative_courant_token(self):
        code, text = _run("stability", "--boundary", "ex29", "--courant", "-1/2", "--format", "json")
        self.assertEqual(code, app.EXIT_OK)
        self.assertEqual(json.loads(text)["class"], "UnstableSimpleZero")

    def test_run_config_round_trip(self):
        args = app.build_parser().parse_args(["compare", "--zone", "front", "--courant=-1/2", "--nu", "1/4", "--nmax", "100"])
        cfg = app.RunConfig.from_args(args)
        self.assertEqual(cfg.courant, "-1/2")
        self.assertEqual(cfg.n_max, 100)
        self.assertEqual(app.RunConfig.from_json(cfg.to_json()), cfg)

    def test_run_config_rejects_unknown_keys(self):
        with self.assertRaises(app.ValidationError):
            app.RunConfig.from_json('{"command": "l2", "colour": "red"}')

    def test_predict_needs_position(self):
        code, _ = _run("predict", "--n", "100")
        self.assertEqual(code, app.EXIT_VALIDATION)

    def test_predict_near_wall(self):
        code, text = _run("predict", "--n", "2000", "--j", "0", "--zone", "near-wall", "--format", "json")
        self.assertEqual(code, app.EXIT_OK)
        self.assertEqual(json.loads(text)["zone"], "NearWall")


if __name__ == "__main__":
    unittest.main()
