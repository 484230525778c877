#!/usr/bin/env python3
"""
Unit tests for the `QuarterWalkComp.walks` modules.
"""
import unittest
from QuarterWalkComp.errors import error
from QuarterWalkComp.walks.step_rules import (
	StepRule,
	builtin_rule,
	incoming_sources,
	region_of,
)
from QuarterWalkComp.walks.walk_dp import (
	check_backward_recursions,
	check_functional_equation,
	dp_counts,
	marginals,
	origin_counts,
)

MAIN_ORIGIN_COUNTS = [1, 0, 2, 2, 10, 16, 64, 126, 454, 1004, 3404]


class TestStepRules(unittest.TestCase):
	def test_region_of(self):
		test_cases = [
			((2, 3), "interior"),
			((2, 0), "horizontal"),
			((0, 2), "vertical"),
			((0, 0), "origin"),
		]
		for state, expected in test_cases:
			with self.subTest(state=state):
				self.assertEqual(region_of(*state), expected)

	def test_builtin_sizes(self):
		self.assertEqual(len(builtin_rule("main").origin), 2)
		self.assertEqual(builtin_rule("big_step").out_degree("origin"), 1)
		self.assertEqual(len(builtin_rule("rational_gf").interior), 5)
		self.assertTrue(builtin_rule("big_step").big_step)
		self.assertEqual(builtin_rule("big_step").out_degree("horizontal"), 3)

	def test_main_steps(self):
		rule = builtin_rule("main")
		self.assertEqual(set(rule.interior), {(-1, 1), (-1, -1), (1, -1)})
		self.assertEqual(set(rule.horizontal), {(-1, 1), (-1, 0), (1, 0)})
		self.assertEqual(set(rule.vertical), {(0, 1), (0, -1), (1, -1)})
		self.assertEqual(set(rule.origin), {(0, 1), (1, 0)})

	def test_unknown_rule(self):
		with self.assertRaises(error.UnknownRule):
			builtin_rule("king")

	def test_invalid_steps(self):
		test_cases = [
			dict(interior=[(2, 0)], horizontal=[], vertical=[], origin=[]),
			dict(interior=[], horizontal=[(0, -1)], vertical=[], origin=[]),
			dict(interior=[], horizontal=[], vertical=[(-1, 1)], origin=[]),
			dict(interior=[], horizontal=[], vertical=[], origin=[(1, -1)]),
		]
		for steps in test_cases:
			with self.subTest(steps=steps):
				with self.assertRaises(error.InvalidStepRule):
					StepRule("bad", **steps)

	def test_incoming_sources_main(self):
		rule = builtin_rule("main")
		self.assertEqual(
			incoming_sources(rule, 2, 0), [(1, 0), (1, 1), (3, 0), (3, 1)]
		)
		self.assertEqual(incoming_sources(rule, 0, 0), [(0, 1), (1, 0), (1, 1)])
		self.assertEqual(incoming_sources(rule, 1, 1), [(0, 2), (2, 0), (2, 2)])

	def test_incoming_sources_big_step(self):
		rule = builtin_rule("big_step")
		self.assertIn((3, 0), incoming_sources(rule, 0, 3))
		self.assertNotIn((0, 0), incoming_sources(rule, 0, 1))


class TestDPCounts(unittest.TestCase):
	@classmethod
	def setUpClass(cls):
		cls.main = dp_counts("main", 30)

	def test_origin_counts(self):
		counts = [self.main.count(0, 0, k) for k in range(11)]
		self.assertEqual(counts, MAIN_ORIGIN_COUNTS)

	def test_length_one(self):
		frame = self.main.to_frame()
		rows = frame[frame["k"] == 1][["i", "j", "count"]].values.tolist()
		self.assertEqual(sorted(map(tuple, rows)), [(0, 1, 1), (1, 0, 1)])

	def test_length_zero(self):
		table = dp_counts("main", 0)
		self.assertEqual(table.to_frame().values.tolist(), [[0, 0, 0, 1]])

	def test_counts_vanish_far_away(self):
		frame = self.main.to_frame()
		self.assertTrue(((frame["i"] + frame["j"]) <= frame["k"]).all())
		self.assertTrue((frame["count"] > 0).all())

	def test_three_power_bound(self):
		for k in range(1, 31):
			with self.subTest(k=k):
				total, _ = marginals(self.main, k)
				self.assertLess(total, 3**k)

	def test_marginals(self):
		self.assertEqual(marginals(self.main, 1), (2, 1))
		total, _ = marginals(self.main, 10)
		self.assertLessEqual(total, 59049)

	def test_axis_symmetry(self):
		for k in range(31):
			with self.subTest(k=k):
				_, axis = marginals(self.main, k)
				vertical = sum(self.main.count(0, j, k) for j in range(k + 1))
				self.assertEqual(axis, vertical)

	def test_out_of_range(self):
		with self.assertRaises(error.OutOfRange):
			marginals(self.main, 31)
		with self.assertRaises(error.OutOfRange):
			self.main.count(0, 0, -1)

	def test_negative_kmax(self):
		with self.assertRaises(ValueError):
			dp_counts("main", -1)

	def test_backward_recursions(self):
		for name in ("main", "rational_gf", "big_step"):
			with self.subTest(name=name):
				self.assertTrue(check_backward_recursions(dp_counts(name, 15)))

	def test_backward_recursions_mutation(self):
		table = dp_counts("big_step", 8)
		mutated = table.with_count(2, 1, 5, table.count(2, 1, 5) + 1)
		self.assertFalse(check_backward_recursions(mutated))
		self.assertEqual(table.count(2, 1, 5), mutated.count(2, 1, 5) - 1)

	def test_big_step_reaches_vertical_axis(self):
		table = dp_counts("big_step", 3)
		self.assertEqual(table.count(0, 1, 1), 0)
		self.assertEqual(table.count(0, 1, 2), 1)


class TestOriginCounts(unittest.TestCase):
	def test_matches_full_table(self):
		for name in ("main", "rational_gf", "big_step"):
			for kmax in (24, 25):
				table = dp_counts(name, kmax)
				with self.subTest(name=name, kmax=kmax):
					self.assertEqual(
						origin_counts(name, kmax),
						[table.count(0, 0, k) for k in range(kmax + 1)],
					)

	def test_main_prefix(self):
		self.assertEqual(origin_counts("main", 10), MAIN_ORIGIN_COUNTS)
		self.assertEqual(origin_counts(builtin_rule("main"), 40)[:11], MAIN_ORIGIN_COUNTS)

	def test_small_lengths(self):
		self.assertEqual(origin_counts("main", 0), [1])
		self.assertEqual(origin_counts("main", 1), [1, 0])
		with self.assertRaises(ValueError):
			origin_counts("main", -1)
		with self.assertRaises(error.UnknownRule):
			origin_counts("king", 3)


class TestFunctionalEquation(unittest.TestCase):
	def test_holds(self):
		table = dp_counts("main", 11)
		self.assertTrue(check_functional_equation(table, 10, 10, 10))

	def test_mutation(self):
		table = dp_counts("main", 11)
		mutated = table.with_count(1, 1, 3, table.count(1, 1, 3) + 1)
		self.assertFalse(check_functional_equation(mutated, 10, 10, 10))

	def test_wrong_rule(self):
		with self.assertRaises(error.WrongRule):
			check_functional_equation(dp_counts("rational_gf", 4), 2, 2, 2)


if __name__ == "__main__":
	unittest.main()
