#!/usr/bin/env python3
"""
Unit tests for the `QuarterWalkComp.asymptotics` modules.
"""
import math
import random
import unittest
from decimal import Decimal
from QuarterWalkComp.errors import error
from QuarterWalkComp.asymptotics.growth import (
	growth_constants,
	growth_table,
	xhat_numeric,
)
from QuarterWalkComp.asymptotics.numeric_ladder import (
	alpha0_numeric,
	alpha0_prime,
	df_dt,
	df_dz,
	eval_ladder,
	f_numeric,
)
from QuarterWalkComp.asymptotics.singularity import (
	RhoBracket,
	certified_sign,
	find_rho,
	h_eval,
	h_partial_bracket,
	h_prime,
	sign_change_count,
)
from QuarterWalkComp.compensation.solver import xhat_series

SQRT8_INV = 1 / math.sqrt(8)
RHO_WINDOW = (0.34499975, 0.34499976)


class TestNumericLadder(unittest.TestCase):
	def test_alpha0_special_values(self):
		self.assertAlmostEqual(alpha0_numeric(0.25), 1 - 1 / math.sqrt(2), places=14)
		self.assertAlmostEqual(eval_ladder(SQRT8_INV, 0).gammas[0], 1 / math.sqrt(2))

	def test_alpha0_relation(self):
		for z in (0.05, 0.2, 0.3, 0.35):
			alpha = alpha0_numeric(z)
			with self.subTest(z=z):
				self.assertAlmostEqual(alpha, z * (1 + 2 * alpha * alpha), places=14)

	def test_bounds_and_decrease(self):
		generator = random.Random(7)
		points = [generator.uniform(1e-3, SQRT8_INV) for _ in range(49)] + [SQRT8_INV]
		for z in points:
			ladder = eval_ladder(z, 25)
			with self.subTest(z=z):
				self.assertTrue(ladder.within_bounds())
				if z < SQRT8_INV:
					self.assertTrue(ladder.is_decreasing())

	def test_bounds_at_03(self):
		ladder = eval_ladder(0.3, 20)
		for k in range(21):
			with self.subTest(k=k):
				self.assertLessEqual(ladder.alphas[k], 2 ** (-(2 * k + 1) / 2))
				self.assertLessEqual(ladder.betas[k], 2 ** (-(2 * k + 2) / 2))

	def test_partial_derivatives(self):
		delta = 1e-6
		for t, z in ((0.5, 0.3), (0.2, 0.26), (0.05, 0.34)):
			with self.subTest(t=t, z=z):
				by_t = (f_numeric(t + delta, z) - f_numeric(t - delta, z)) / (2 * delta)
				by_z = (f_numeric(t, z + delta) - f_numeric(t, z - delta)) / (2 * delta)
				self.assertAlmostEqual(df_dt(t, z), by_t, places=7)
				self.assertAlmostEqual(df_dz(t, z), by_z, places=7)

	def test_alpha0_prime(self):
		delta = 1e-6
		for z in (0.26, 0.3, 0.34):
			expected = (alpha0_numeric(z + delta) - alpha0_numeric(z - delta)) / (2 * delta)
			with self.subTest(z=z):
				self.assertAlmostEqual(alpha0_prime(z), expected, places=6)

	def test_derivative_bounds(self):
		ladder = eval_ladder(0.3, 11, with_derivatives=True)
		for k in range(21):
			with self.subTest(k=k):
				self.assertLessEqual(abs(df_dt(ladder.gammas[k], 0.3)), 4 * math.sqrt(2) / 9)
				self.assertLessEqual(abs(ladder.gprimes[k + 1]), 100 / math.sqrt(2) ** (k + 1))

	def test_gamma_derivatives(self):
		delta = 1e-6
		ladder = eval_ladder(0.3, 5, with_derivatives=True)
		upper = eval_ladder(0.3 + delta, 5).gammas
		lower = eval_ladder(0.3 - delta, 5).gammas
		for m in range(12):
			with self.subTest(m=m):
				expected = (upper[m] - lower[m]) / (2 * delta)
				self.assertAlmostEqual(ladder.gprimes[m], expected, places=6)

	def test_domain(self):
		for z in (0.0, -0.1, 0.4):
			with self.subTest(z=z):
				with self.assertRaises(error.DomainError):
					eval_ladder(z, 3)
		with self.assertRaises(error.DerivativeDomainError):
			eval_ladder(0.2, 3, with_derivatives=True)
		with self.assertRaises(ValueError):
			eval_ladder(0.3, 3).product_derivatives()


class TestSingularity(unittest.TestCase):
	def test_signs_at_the_ends(self):
		value, bound = h_eval(1 / 3 + 1e-9, 8)
		self.assertGreater(value - bound, 0)
		value, bound = h_eval(0.35, 8)
		self.assertLess(value + bound, 0)

	def test_partial_sandwich(self):
		lower, upper = h_partial_bracket(0.34, 4)
		value, _ = h_eval(0.34, 60)
		self.assertLess(lower, value)
		self.assertLess(value, upper)

	def test_certified_sign_is_stable(self):
		for z in (0.3, 0.34, 0.3449, 0.3451, 0.35):
			sign, used = certified_sign(z)
			value, bound = h_eval(z, used + 10)
			with self.subTest(z=z):
				self.assertEqual(sign, 1 if value > 0 else -1)
				self.assertGreater(abs(value), bound)

	def test_sign_ambiguity(self):
		with self.assertRaises(error.SignAmbiguity):
			certified_sign(0.344999755, p_start=8, p_max=8)

	def test_find_rho(self):
		for tol in (1e-8, 1e-10):
			bracket = find_rho(tol)
			with self.subTest(tol=tol):
				self.assertLessEqual(bracket.width, tol)
				self.assertLessEqual(bracket.lo, RHO_WINDOW[1])
				self.assertGreaterEqual(bracket.hi, RHO_WINDOW[0])
		bracket = find_rho(1e-8)
		self.assertGreaterEqual(bracket.lo, 0.344999)
		self.assertLessEqual(bracket.hi, 0.345000)

	def test_find_rho_rejects_tolerance(self):
		with self.assertRaises(ValueError):
			find_rho(0.0)

	def test_single_sign_change(self):
		self.assertEqual(sign_change_count(1000), 1)

	def test_bracket(self):
		bracket = RhoBracket(0.1, 0.3, 8)
		self.assertAlmostEqual(bracket.mid, 0.2)
		with self.assertRaises(ValueError):
			RhoBracket(0.3, 0.1, 8)

	def test_h_prime_finite_difference(self):
		delta = 1e-6
		for z in (0.26, 0.30, 0.34):
			value, bound = h_prime(z)
			expected = (h_eval(z + delta, 60)[0] - h_eval(z - delta, 60)[0]) / (2 * delta)
			with self.subTest(z=z):
				self.assertLessEqual(abs(value - expected), 1e-6 * abs(expected))
				self.assertLess(bound, 1e-6)

	def test_h_prime_domain(self):
		with self.assertRaises(error.DerivativeDomainError):
			h_prime(0.2)


class TestGrowth(unittest.TestCase):
	@classmethod
	def setUpClass(cls):
		cls.bracket = find_rho(1e-10)
		cls.report = growth_constants(cls.bracket)

	def test_xhat_numeric_against_series(self):
		for i, j in ((0, 0), (1, 0), (2, 1)):
			value, bound = xhat_numeric(i, j, 0.1)
			exact = xhat_series(i, j, 40).evaluate(0.1)
			with self.subTest(i=i, j=j):
				self.assertLessEqual(abs(value - exact), 1e-10 + bound)

	def test_xhat_series_tail_near_rho(self):
		# Coefficients of xhat_{0,0} grow like sqrt(8)^n, so past z^40 the terms at
		# z = 0.3 shrink by (0.3 sqrt(8))^10 < 0.2 per ten orders and the tail is
		# below the increment of the orders 31..40.
		z = 0.3
		series = xhat_series(0, 0, 40)
		partial = series.evaluate(z)
		increment = abs(partial - series.truncate(30).evaluate(z))
		value, bound = xhat_numeric(0, 0, z)
		self.assertLess((z * math.sqrt(8)) ** 10, 0.2)
		self.assertLess(increment, 1e-2)
		self.assertLessEqual(abs(partial - value), increment + bound)

	def test_xhat_symmetry(self):
		self.assertAlmostEqual(xhat_numeric(2, 1, 0.3)[0], xhat_numeric(1, 2, 0.3)[0])

	def test_c00(self):
		self.assertAlmostEqual(self.report.C00, 0.0531, delta=5e-4)
		self.assertGreater(self.report.C00, 0)
		self.assertLess(self.report.C00_err, 5e-4)

	def test_xhat_at_rho(self):
		rho = self.bracket.mid
		value, bound = xhat_numeric(0, 0, rho)
		self.assertAlmostEqual(1 + value, (3 * rho - 1) / rho, delta=1e-7 + bound)

	def test_axis_over_total(self):
		ratio = self.report.axis_const / self.report.total_const
		self.assertAlmostEqual(ratio, 1 - alpha0_numeric(self.bracket.mid), places=12)

	def test_cij(self):
		cij = self.report.Cij
		self.assertEqual(len(cij), 8)
		self.assertAlmostEqual(cij[(1, 0)], cij[(0, 1)])
		self.assertAlmostEqual(cij[(2, 1)], cij[(1, 2)])
		for value in cij.values():
			self.assertGreater(value, 0)

	def test_growth_table(self):
		table = growth_table(10, 100, 10, self.report)
		self.assertEqual(list(table["k"]), list(range(10, 101, 10)))
		self.assertEqual(table["exact"].iloc[0], 3404)
		exact_100 = table["exact"].iloc[-1]
		self.assertIsInstance(exact_100, int)
		self.assertAlmostEqual(float(exact_100) / 1e44, 8.814, delta=6e-4)
		ratios = dict(zip(table["k"], table["ratio"]))
		for k, expected in ((10, 0.653), (20, 0.840), (50, 0.969), (100, 0.995)):
			with self.subTest(k=k):
				self.assertAlmostEqual(ratios[k], expected, delta=1e-3)
		self.assertTrue(table["ratio"].is_monotonic_increasing)
		self.assertIsInstance(table["approx"].iloc[0], Decimal)
		self.assertAlmostEqual(float(table["approx"].iloc[0]) / 3404, ratios[10], places=9)

	def test_growth_table_beyond_float_range(self):
		table = growth_table(1000, 1000, 1, self.report)
		exact = table["exact"].iloc[0]
		approx = table["approx"].iloc[0]
		ratio = table["ratio"].iloc[0]
		self.assertIsInstance(exact, int)
		self.assertGreater(approx, Decimal("1e308"))
		self.assertTrue(math.isfinite(ratio))
		self.assertAlmostEqual(ratio, 1, delta=5e-3)
		self.assertAlmostEqual(float(approx / Decimal(exact)), ratio, places=9)

	def test_growth_table_odd_length(self):
		table = growth_table(1, 1, 1, self.report)
		self.assertEqual(table["exact"].iloc[0], 0)
		self.assertTrue(math.isnan(table["ratio"].iloc[0]))

	def test_growth_table_range(self):
		with self.assertRaises(ValueError):
			growth_table(20, 10, 1, self.report)
		with self.assertRaises(TypeError):
			growth_table(10, 20, 2.5, self.report)


if __name__ == "__main__":
	unittest.main()
