#!/usr/bin/env python3
"""
Unit tests for the `QuarterWalkComp.variants` modules.
"""
import unittest
from QuarterWalkComp.errors import error
from QuarterWalkComp.series.trunc_series import TruncSeries
from QuarterWalkComp.variants.big_step_walk import (
	build_bigstep,
	cubic_residual,
	g_apply,
	q_bigstep,
)
from QuarterWalkComp.variants.rational_walk import q_rational, solve_rational
from QuarterWalkComp.walks.step_rules import builtin_rule
from QuarterWalkComp.walks.walk_dp import check_series_recursions, dp_counts


class TestRationalWalk(unittest.TestCase):
	@classmethod
	def setUpClass(cls):
		cls.solution = solve_rational(30)

	def test_leading_coefficient(self):
		self.assertEqual(self.solution.beta0.valuation, 1)
		self.assertEqual(self.solution.beta0[1], 1)
		self.assertEqual(self.solution.order, 30)

	def test_relations(self):
		self.assertTrue(self.solution.fixed_point_residual().is_zero())
		self.assertEqual(self.solution.c0, self.solution.c0_from_kernel())
		self.assertTrue(self.solution.check_relations())

	def test_small_coefficients(self):
		self.assertEqual(q_rational(0, 0, 5)[0], 1)
		self.assertEqual(q_rational(1, 0, 5)[1], 1)
		self.assertEqual(q_rational(3, 3, 0), TruncSeries([0], 0))

	def test_against_dp(self):
		table = dp_counts("rational_gf", 25)
		solution = solve_rational(25)
		for i in range(6):
			for j in range(6):
				expected = [table.count(i, j, k) for k in range(26)]
				with self.subTest(i=i, j=j):
					self.assertEqual(list(solution.q(i, j).coeffs), expected)

	def test_rank_one(self):
		solution = solve_rational(20)
		for i in range(6):
			for j in range(6):
				with self.subTest(i=i, j=j):
					self.assertEqual(
						solution.q(i, j) * solution.q(0, 0),
						solution.q(i, 0) * solution.q(0, j),
					)

	def test_series_recursions(self):
		solution = solve_rational(20)
		self.assertTrue(
			check_series_recursions(builtin_rule("rational_gf"), solution.q, 4, 4, 20)
		)

	def test_order_check(self):
		with self.assertRaises(ValueError):
			solve_rational(0)
		with self.assertRaises(TypeError):
			q_rational(1, 1, "5")


class TestBranchFunction(unittest.TestCase):
	def test_g_of_zero(self):
		g = g_apply(TruncSeries.zero(7), 7)
		self.assertEqual(g, TruncSeries([0, 1, 0, 1, 0, 2, 0, 5], 7))

	def test_quadratic(self):
		t = g_apply(TruncSeries.zero(30), 30)
		g = g_apply(t, 30)
		one_plus = 1 + t
		residual = (
			(one_plus * g * g + one_plus).mul_z(1).truncate(30)
			- (1 - t.mul_z(1)) * g
		)
		self.assertTrue(residual.is_zero())

	def test_kernel_pair(self):
		beta = g_apply(TruncSeries.zero(20), 20)
		alpha = g_apply(beta, 20)
		rhs = (1 + beta + alpha * beta + alpha * alpha * (1 + beta)).mul_z(1).truncate(20)
		self.assertEqual(alpha, rhs)

	def test_plus_branch(self):
		with self.assertRaises(error.BadValuation):
			g_apply(TruncSeries.zero(6), 6, branch="plus")

	def test_constant_term(self):
		with self.assertRaises(error.NonPositiveValuation):
			g_apply(TruncSeries([1], 6), 6)


class TestBigStepWalk(unittest.TestCase):
	@classmethod
	def setUpClass(cls):
		cls.ladder = build_bigstep(20, 20)

	def test_first_rungs(self):
		self.assertTrue(self.ladder.betas[0].is_zero())
		self.assertEqual(self.ladder.betas[1], g_apply(TruncSeries.zero(20), 20))
		self.assertEqual(self.ladder.cs[0][0], 1)

	def test_ladder_laws(self):
		self.assertTrue(self.ladder.valuations_ok())
		self.assertTrue(self.ladder.recurrences_ok())
		self.assertEqual(self.ladder.cs[3].valuation, 3)
		for k in range(8):
			with self.subTest(k=k):
				self.assertEqual(self.ladder.cs[k].valuation, k)

	def test_depth_follows_order(self):
		self.assertEqual(build_bigstep(2, 6).K, 6)
		self.assertEqual(build_bigstep(9, 6).K, 9)

	def test_small_coefficients(self):
		self.assertEqual(q_bigstep(0, 0, 6, self.ladder)[0], 1)
		self.assertEqual(q_bigstep(0, 1, 6, self.ladder)[1], 0)

	def test_against_dp(self):
		table = dp_counts("big_step", 20)
		for i in range(6):
			for j in range(6):
				expected = [table.count(i, j, k) for k in range(21)]
				with self.subTest(i=i, j=j):
					series = q_bigstep(i, j, 20, self.ladder)
					self.assertEqual(list(series.coeffs), expected)

	def test_depth_stability(self):
		deeper = build_bigstep(23, 20)
		for i, j in ((0, 0), (2, 1), (1, 3)):
			with self.subTest(i=i, j=j):
				self.assertEqual(q_bigstep(i, j, 20, self.ladder), q_bigstep(i, j, 20, deeper))

	def test_insufficient_depth(self):
		with self.assertRaises(error.InsufficientDepth):
			q_bigstep(0, 0, 12, build_bigstep(6, 6))

	def test_cubic_residual(self):
		valuations = [cubic_residual(self.ladder.alphas[k]).valuation for k in range(8)]
		for before, after in zip(valuations, valuations[1:]):
			self.assertLess(before, after)

	def test_series_recursions(self):
		self.assertTrue(
			check_series_recursions(
				builtin_rule("big_step"),
				lambda i, j: q_bigstep(i, j, 20, self.ladder),
				4,
				4,
				20,
			)
		)


if __name__ == "__main__":
	unittest.main()
