#!/usr/bin/env python3
"""
Unit tests for the `QuarterWalkComp.verify.suites` module.
"""
import unittest
from unittest import mock
from QuarterWalkComp.errors import error
from QuarterWalkComp.utils.logging import SingletonLogger
from QuarterWalkComp.verify import suites
from QuarterWalkComp.walks import step_rules

MUTATED_MAIN = dict(
	interior=[(-1, 1), (-1, -1)],
	horizontal=[(-1, 1), (-1, 0), (1, 0)],
	vertical=[(0, 1), (0, -1), (1, -1)],
	origin=[(0, 1), (1, 0)],
)


class TestSuites(unittest.TestCase):
	def test_series_suite(self):
		results = suites.run_suite("series")
		self.assertEqual(list(results), list(suites.SUITES["series"]))
		self.assertTrue(all(results.values()))

	def test_ladder_suite(self):
		self.assertTrue(all(suites.run_suite("ladder").values()))

	def test_oracle_suite(self):
		self.assertTrue(all(suites.run_suite("oracle").values()))

	def test_mutated_oracle(self):
		with mock.patch.dict(step_rules._BUILTIN, {"main": MUTATED_MAIN}):
			results = suites.run_suite("oracle")
		self.assertFalse(results["origin_counts"])
		self.assertFalse(results["compensation_vs_dp"])

	def test_horner_consistency(self):
		check = suites.SUITES["numeric"]["horner_consistency"]
		self.assertTrue(check())
		exact = suites.growth.xhat_numeric

		def shifted(i, j, z):
			value, bound = exact(i, j, z)
			return (value + 0.05, bound) if z == 0.3 else (value, bound)

		with mock.patch.object(suites.growth, "xhat_numeric", side_effect=shifted):
			self.assertFalse(check())

	def test_unknown_suite(self):
		with self.assertRaises(ValueError):
			suites.run_suite("everything")

	def test_run_check(self):
		logger = SingletonLogger()

		def broken():
			raise ArithmeticError("boom")

		with self.assertLogs(logger.logger, level="ERROR") as cm:
			self.assertFalse(suites.run_check("demo.broken", broken))
		self.assertIn("FAILED demo.broken", cm.output[0])
		with self.assertLogs(logger.logger, level="ERROR"):
			self.assertFalse(suites.run_check("demo.false", lambda: False))
		self.assertTrue(suites.run_check("demo.true", lambda: True))

	def test_sign_ambiguity_passes_through(self):
		def ambiguous():
			raise error.SignAmbiguity(0.345, 60)

		with self.assertRaises(error.SignAmbiguity):
			suites.run_check("numeric.rho_bracket", ambiguous)

	def test_summary(self):
		summary = suites.summary("demo", {"a": True, "b": False})
		self.assertEqual(
			summary,
			{
				"suite": "demo",
				"passed": False,
				"n_checks": 2,
				"failed": ["b"],
				"checks": {"a": True, "b": False},
			},
		)


if __name__ == "__main__":
	unittest.main()
