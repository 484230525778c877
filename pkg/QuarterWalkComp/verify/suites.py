#!/usr/bin/env python3
"""
Suites Module

This module collects the invariants of the package into named suites. Every check is
a function without arguments returning a boolean; a check that raises counts as
failed. Failures are listed through the logger, the results are returned as a
mapping from check name to outcome.

Attributes:
* SUITES: Mapping of suite name to its ordered checks.

Functions:
* run_check(name: str, check: callable) -> bool: Run one check, logging a failure.
* run_suite(suite: str) -> dict[str, bool]: Run a suite, or all of them for "all".
* summary(suite: str, results: dict[str, bool]) -> dict: Machine readable summary.
"""
import math
import random
from fractions import Fraction
from ..asymptotics import growth, numeric_ladder, singularity
from ..compensation import ladder, solver
from ..errors import error
from ..series.trunc_series import TruncSeries, compose
from ..utils import helpers, logging
from ..variants import big_step_walk, rational_walk
from ..walks import step_rules, walk_dp

MAIN_ORIGIN_COUNTS = [1, 0, 2, 2, 10, 16, 64, 126, 454, 1004, 3404]
RHO_WINDOW = (0.34499975, 0.34499976)
C00_TARGET = (0.0531, 5e-4)
RATIO_TARGETS = {10: 0.653, 20: 0.840, 50: 0.969, 100: 0.995}
RATIO_TOL = 1e-3


# series


def _sqrt_squares() -> bool:
	s = TruncSeries([1, 3, Fraction(-1, 2), 7, 0, 2], 12)
	root = s.sqrt_one_plus()
	return root * root == s and root[0] == 1


def _division_inverse() -> bool:
	a = TruncSeries([2, -1, 5, Fraction(1, 3)], 15)
	b = TruncSeries([1, 1, 0, -4], 15)
	return (a / b) * b == a


def _alpha0_relation() -> bool:
	alpha0, beta0 = ladder.initial_pair(30)
	relation = (1 + 2 * alpha0 * alpha0).mul_z(1).truncate(30)
	return alpha0 == relation and beta0 * (1 + alpha0 * alpha0) == alpha0 * alpha0


def _compose_geometric() -> bool:
	geometric = TruncSeries([1] * 21, 20)
	inner = TruncSeries.z(20).mul_z(1).truncate(20)
	expected = TruncSeries([(n + 1) % 2 for n in range(21)], 20)
	return compose(geometric, inner) == expected


# ladder


def _valuation_law() -> bool:
	return ladder.build_ladder(12, 30).valuations_ok()


def _kernel_residuals() -> bool:
	return all(r.is_zero() for r in ladder.build_ladder(12, 30).kernel_residuals())


def _compensation_coefficients() -> bool:
	rungs = ladder.build_ladder(5, 20)
	cs, ds = ladder.compensation_coefficients(rungs)
	alphas, betas = rungs.alphas, rungs.betas
	closed_c = [(1 - alphas[k]) * (1 - betas[k]) for k in range(6)]
	closed_d = [-(1 - alphas[k + 1]) * (1 - betas[k]) for k in range(5)]
	return cs == closed_c and ds == closed_d


def _truncation_sufficiency() -> bool:
	for p in (10, 20):
		for i in range(3):
			for j in range(3):
				needed = solver.truncation_bound(i, j, p)
				short = ladder.build_ladder(needed, max(p, 2 * needed + 2))
				deep = ladder.build_ladder(needed + 3, max(p, 2 * needed + 8))
				if solver.xhat_series(i, j, p, short) != solver.xhat_series(i, j, p, deep):
					return False
	return True


# oracle


def _origin_counts() -> bool:
	table = walk_dp.dp_counts("main", 10)
	exact = [table.count(0, 0, k) for k in range(11)]
	series = list(solver.q_series(0, 0, 10).coeffs)
	return exact == MAIN_ORIGIN_COUNTS and series == MAIN_ORIGIN_COUNTS


def _compensation_vs_dp() -> bool:
	table = walk_dp.dp_counts("main", 30)
	solution = solver.CompensationSolution(30)
	for i in range(7):
		for j in range(7):
			expected = [table.count(i, j, k) for k in range(31)]
			if list(solution.q(i, j).coeffs) != expected:
				return False
	return True


def _functional_equation() -> bool:
	return walk_dp.check_functional_equation(walk_dp.dp_counts("main", 11), 10, 10, 10)


def _backward_recursions() -> bool:
	return all(
		walk_dp.check_backward_recursions(walk_dp.dp_counts(name, 20))
		for name in helpers.WALK_NAMES
	)


# identities


def _boundary_identities() -> bool:
	return solver.check_boundary_identities(60)


def _normalisation() -> bool:
	return solver.CompensationSolution(30).check_normalisation()


def _special_values() -> bool:
	table = walk_dp.dp_counts("main", 25)
	_, axis, total = solver.special_values(25)
	return all((total[k], axis[k]) == walk_dp.marginals(table, k) for k in range(26))


def _main_series_recursions() -> bool:
	solution = solver.CompensationSolution(20)
	return walk_dp.check_series_recursions(
		step_rules.builtin_rule("main"), solution.q, 5, 5, 20
	)


# variants


def _rational_relations() -> bool:
	return rational_walk.solve_rational(30).check_relations()


def _rational_vs_dp() -> bool:
	table = walk_dp.dp_counts("rational_gf", 25)
	solution = rational_walk.solve_rational(25)
	return all(
		list(solution.q(i, j).coeffs) == [table.count(i, j, k) for k in range(26)]
		for i in range(6)
		for j in range(6)
	)


def _rational_rank_one() -> bool:
	solution = rational_walk.solve_rational(20)
	return all(
		solution.q(i, j) * solution.q(0, 0) == solution.q(i, 0) * solution.q(0, j)
		for i in range(6)
		for j in range(6)
	)


def _bigstep_ladder() -> bool:
	rungs = big_step_walk.build_bigstep(20, 20)
	return rungs.valuations_ok() and rungs.recurrences_ok()


def _bigstep_vs_dp() -> bool:
	table = walk_dp.dp_counts("big_step", 20)
	rungs = big_step_walk.build_bigstep(20, 20)
	return all(
		list(big_step_walk.q_bigstep(i, j, 20, rungs).coeffs)
		== [table.count(i, j, k) for k in range(21)]
		for i in range(6)
		for j in range(6)
	)


def _bigstep_cubic() -> bool:
	rungs = big_step_walk.build_bigstep(20, 20)
	valuations = [big_step_walk.cubic_residual(rungs.alphas[k]).valuation for k in range(8)]
	return all(a < b for a, b in zip(valuations, valuations[1:]))


def _variant_recursions() -> bool:
	rational = rational_walk.solve_rational(20)
	rungs = big_step_walk.build_bigstep(20, 20)
	return walk_dp.check_series_recursions(
		step_rules.builtin_rule("rational_gf"), rational.q, 4, 4, 20
	) and walk_dp.check_series_recursions(
		step_rules.builtin_rule("big_step"),
		lambda i, j: big_step_walk.q_bigstep(i, j, 20, rungs),
		4,
		4,
		20,
	)


# numeric


def _ladder_bounds() -> bool:
	generator = random.Random(2024)
	high = helpers.WalkDefaults.SQRT8_INV
	points = [generator.uniform(1e-3, high) for _ in range(49)]
	if not numeric_ladder.eval_ladder(high, 25).within_bounds():
		return False
	for z in points:
		rungs = numeric_ladder.eval_ladder(z, 25)
		if not (rungs.within_bounds() and rungs.is_decreasing()):
			return False
	return True


def _rho_bracket() -> bool:
	bracket = singularity.find_rho(helpers.WalkDefaults.TOL)
	return (
		bracket.width <= helpers.WalkDefaults.TOL
		and bracket.lo <= RHO_WINDOW[1]
		and bracket.hi >= RHO_WINDOW[0]
	)


def _single_sign_change() -> bool:
	return singularity.sign_change_count(1000) == 1


def _h_prime() -> bool:
	delta = 1e-6
	for z in (0.26, 0.30, 0.34):
		value, _ = singularity.h_prime(z)
		upper, _ = singularity.h_eval(z + delta, helpers.WalkDefaults.P_MAX)
		lower, _ = singularity.h_eval(z - delta, helpers.WalkDefaults.P_MAX)
		expected = (upper - lower) / (2 * delta)
		if abs(value - expected) > 1e-6 * abs(expected):
			return False
	return True


def _derivative_bounds() -> bool:
	rungs = numeric_ladder.eval_ladder(0.3, 11, with_derivatives=True)
	for k in range(21):
		if abs(numeric_ladder.df_dt(rungs.gammas[k], 0.3)) > 4 * math.sqrt(2) / 9:
			return False
		if abs(rungs.gprimes[k + 1]) > 100 / math.sqrt(2) ** (k + 1):
			return False
	return True


def _growth_constants() -> bool:
	report = growth.asymptotic_report()
	target, tol = C00_TARGET
	if abs(report.C00 - target) > tol:
		return False
	ratios = dict(zip(report.table["k"], report.table["ratio"]))
	return all(abs(ratios[k] - value) <= RATIO_TOL for k, value in RATIO_TARGETS.items())


def _horner_consistency() -> bool:
	series = solver.xhat_series(0, 0, 40)
	value, bound = growth.xhat_numeric(0, 0, 0.1)
	if abs(series.evaluate(0.1) - value) > 1e-10 + bound:
		return False
	# at 0.3 the tail past z^40 is below the increment of the orders 31..40
	partial = series.evaluate(0.3)
	increment = abs(partial - series.truncate(30).evaluate(0.3))
	value, bound = growth.xhat_numeric(0, 0, 0.3)
	return abs(partial - value) <= increment + bound


SUITES = {
	"series": {
		"sqrt_squares": _sqrt_squares,
		"division_inverse": _division_inverse,
		"alpha0_relation": _alpha0_relation,
		"compose_geometric": _compose_geometric,
	},
	"ladder": {
		"valuation_law": _valuation_law,
		"kernel_residuals": _kernel_residuals,
		"compensation_coefficients": _compensation_coefficients,
		"truncation_sufficiency": _truncation_sufficiency,
	},
	"oracle": {
		"origin_counts": _origin_counts,
		"compensation_vs_dp": _compensation_vs_dp,
		"functional_equation": _functional_equation,
		"backward_recursions": _backward_recursions,
	},
	"identities": {
		"boundary_identities": _boundary_identities,
		"normalisation": _normalisation,
		"special_values": _special_values,
		"series_recursions": _main_series_recursions,
	},
	"variants": {
		"rational_relations": _rational_relations,
		"rational_vs_dp": _rational_vs_dp,
		"rational_rank_one": _rational_rank_one,
		"bigstep_ladder": _bigstep_ladder,
		"bigstep_vs_dp": _bigstep_vs_dp,
		"bigstep_cubic": _bigstep_cubic,
		"series_recursions": _variant_recursions,
	},
	"numeric": {
		"ladder_bounds": _ladder_bounds,
		"rho_bracket": _rho_bracket,
		"single_sign_change": _single_sign_change,
		"h_prime": _h_prime,
		"derivative_bounds": _derivative_bounds,
		"growth_constants": _growth_constants,
		"horner_consistency": _horner_consistency,
	},
}


def run_check(name: str, check: callable) -> bool:
	"""
	Run a single check. Exceptions other than SignAmbiguity count as a failure.

	Args:
	    name (str): Name used in the log.
	    check (callable): The check.

	Returns:
	    bool: The outcome.

	Raises:
	    SignAmbiguity: Passed on to the caller.
	"""
	logger = logging.SingletonLogger()
	try:
		passed = bool(check())
	except error.SignAmbiguity:
		raise
	except Exception:
		logger.log_exception(f"FAILED {name}: raised")
		return False
	if passed:
		logger.log_debug(f"passed {name}")
	else:
		logger.log_error(f"FAILED {name}")
	return passed


def run_suite(suite: str) -> dict[str, bool]:
	"""
	Run a suite of checks.

	Args:
	    suite (str): One of VERIFY_SUITES; "all" runs every suite and prefixes the
	        check names with the suite name.

	Returns:
	    dict[str, bool]: Outcome per check, in order.

	Raises:
	    ValueError: For an unknown suite.
	"""
	if suite not in helpers.VERIFY_SUITES:
		raise ValueError(f"Unknown suite '{suite}', use one of {helpers.VERIFY_SUITES}.")
	names = list(SUITES) if suite == "all" else [suite]
	logger = logging.SingletonLogger()
	results = {}
	for name in names:
		logger.log_info(f"Running suite '{name}'")
		for check_name, check in SUITES[name].items():
			key = f"{name}.{check_name}" if suite == "all" else check_name
			results[key] = run_check(key, check)
	failed = [key for key, passed in results.items() if not passed]
	logger.log_info(f"{len(results) - len(failed)} of {len(results)} checks passed")
	return results


def summary(suite: str, results: dict[str, bool]) -> dict:
	return {
		"suite": suite,
		"passed": all(results.values()),
		"n_checks": len(results),
		"failed": [key for key, passed in results.items() if not passed],
		"checks": results,
	}
