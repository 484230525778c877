#!/usr/bin/env python3
"""
Command line interface of QuarterWalkComp.

Subcommands:
* count: Exact counts of a walk by dynamic programming.
* coeffs: Coefficients of q_{i,j}(z) from the series solution of a walk.
* asymptotics: Bracket around rho, growth constants and the growth table.
* table: Exact against asymptotic counts of walks returning to the origin.
* verify: Run a suite of invariant checks.

Data goes to stdout (or --out), diagnostics to stderr. Results are validated before
anything is written. Exit codes: 0 success, 1 failed invariant, 2 invalid arguments,
3 undecidable sign of h.

Functions:
* build_parser() -> argparse.ArgumentParser: The argument parser.
* main(argv: list[str] | None) -> int: Entry point, returns the exit code.
"""
import argparse
from pathlib import Path
from .asymptotics import growth, singularity
from .compensation import solver
from .errors import error
from .export import exporters
from .utils import helpers, logging
from .variants import big_step_walk, rational_walk
from .verify import suites
from .walks import walk_dp

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_SIGN = 3


class InvariantFailure(Exception):
	"""A computed result failed its validation and is not emitted."""


def _bounded_int(maximum: int) -> callable:
	def parse(text: str) -> int:
		try:
			value = int(text)
		except ValueError as exc:
			raise argparse.ArgumentTypeError(f"'{text}' is not an integer") from exc
		if not 0 <= value <= maximum:
			raise argparse.ArgumentTypeError(f"{value} is outside of [0, {maximum}]")
		return value

	return parse


def _positive_float(text: str) -> float:
	try:
		value = float(text)
	except ValueError as exc:
		raise argparse.ArgumentTypeError(f"'{text}' is not a number") from exc
	if not value > 0:
		raise argparse.ArgumentTypeError(f"{value} is not positive")
	return value


def build_parser() -> argparse.ArgumentParser:
	"""
	Build the argument parser with its subcommands.

	Returns:
	    argparse.ArgumentParser: The parser.
	"""
	defaults = helpers.WalkDefaults
	kmax_type = _bounded_int(defaults.KMAX_GUARD)
	order_type = _bounded_int(defaults.ORDER_GUARD)
	parser = argparse.ArgumentParser(
		prog="quarterwalk",
		description="Count quarter plane walks and compute their asymptotics.",
	)
	parser.add_argument("--quiet", action="store_true", help="Only log warnings.")
	parser.add_argument("--out", type=Path, default=None, help="Write data to a file.")
	commands = parser.add_subparsers(dest="command", required=True)

	count = commands.add_parser("count", help="Exact counts by dynamic programming.")
	count.add_argument("--walk", choices=helpers.WALK_NAMES, default="main")
	count.add_argument("--kmax", type=kmax_type, required=True)
	count.add_argument("--format", choices=helpers.OUTPUT_FORMATS, default="json")

	coeffs = commands.add_parser("coeffs", help="Coefficients of q_{i,j}(z).")
	coeffs.add_argument("--walk", choices=helpers.WALK_NAMES, default="main")
	coeffs.add_argument("--i", type=order_type, default=0)
	coeffs.add_argument("--j", type=order_type, default=0)
	coeffs.add_argument("--order", type=order_type, default=defaults.ORDER)
	coeffs.add_argument(
		"--solution",
		action="store_true",
		help="Emit q for every pair up to (i, j) with c and the identity check.",
	)
	coeffs.add_argument("--format", choices=helpers.OUTPUT_FORMATS, default="json")

	asymptotics = commands.add_parser("asymptotics", help="Growth constants.")
	asymptotics.add_argument("--tol", type=_positive_float, default=defaults.TOL)
	asymptotics.add_argument("--p-max", type=order_type, default=defaults.P_MAX)
	asymptotics.add_argument("--format", choices=helpers.OUTPUT_FORMATS, default="json")

	table = commands.add_parser("table", help="Exact against asymptotic counts.")
	table.add_argument("--kmin", type=kmax_type, default=defaults.TABLE_RANGE[0])
	table.add_argument("--kmax", type=kmax_type, default=defaults.TABLE_RANGE[1])
	table.add_argument("--step", type=kmax_type, default=defaults.TABLE_RANGE[2])
	table.add_argument("--tol", type=_positive_float, default=defaults.TOL)
	table.add_argument("--format", choices=helpers.OUTPUT_FORMATS, default="json")

	verify = commands.add_parser("verify", help="Run invariant checks.")
	verify.add_argument("--suite", choices=helpers.VERIFY_SUITES, default="all")
	return parser


def _series_for(walk: str, i: int, j: int, order: int):
	if walk == "main":
		return solver.q_series(i, j, order)
	if walk == "rational_gf":
		return rational_walk.q_rational(i, j, order)
	return big_step_walk.q_bigstep(i, j, order)


def _solution_payload(walk: str, order: int, pairs: list[tuple[int, int]]) -> dict:
	if walk == "main":
		return exporters.solution_payload(solver.CompensationSolution(order), pairs)
	if walk == "rational_gf":
		return exporters.rational_payload(rational_walk.solve_rational(order), pairs)
	return exporters.bigstep_payload(big_step_walk.build_bigstep(order, order), pairs)


def _is_count(coefficient) -> bool:
	value = helpers.rational_from_str(str(coefficient))
	return value.denominator == 1 and value >= 0


def run_count(args: argparse.Namespace) -> str:
	table = walk_dp.dp_counts(args.walk, args.kmax)
	if not walk_dp.check_backward_recursions(table):
		raise InvariantFailure(f"The counts of '{args.walk}' fail their recursions.")
	return exporters.render(
		exporters.counts_payload(table), exporters.counts_frame(table), args.format
	)


def run_coeffs(args: argparse.Namespace) -> str:
	if args.solution:
		pairs = [(i, j) for i in range(args.i + 1) for j in range(args.j + 1)]
		payload = _solution_payload(args.walk, args.order, pairs)
		if not payload["identities_ok"]:
			raise InvariantFailure(f"The solution of '{args.walk}' fails its identities.")
		if not all(_is_count(c) for coeffs in payload["q"].values() for c in coeffs):
			raise InvariantFailure("A generating function has a non-count coefficient.")
		return exporters.render(payload, exporters.solution_frame(payload), args.format)
	series = _series_for(args.walk, args.i, args.j, args.order)
	if not all(_is_count(c) for c in series):
		raise InvariantFailure("A generating function has a non-count coefficient.")
	payload = exporters.series_payload(series, args.walk, args.i, args.j)
	frame = exporters.series_frame(series, args.walk, args.i, args.j)
	return exporters.render(payload, frame, args.format)


def run_asymptotics(args: argparse.Namespace) -> str:
	bracket = singularity.find_rho(args.tol, p_max=args.p_max)
	report = growth.growth_constants(bracket)
	low, high, step = helpers.WalkDefaults.TABLE_RANGE
	report = report.with_table(growth.growth_table(low, high, step, report))
	if not report.C00 > 0 or not bracket.width <= args.tol:
		raise InvariantFailure("The growth constants are inconsistent.")
	return exporters.render(
		exporters.report_payload(report), exporters.report_frame(report), args.format
	)


def run_table(args: argparse.Namespace) -> str:
	report = growth.growth_constants(singularity.find_rho(args.tol))
	table = growth.growth_table(args.kmin, args.kmax, args.step, report)
	if any(exact < 0 for exact in table["exact"]):
		raise InvariantFailure("The growth table has a negative count.")
	return exporters.render(
		exporters.table_payload(table), exporters.table_frame(table), args.format
	)


def run_verify(args: argparse.Namespace) -> tuple[str, bool]:
	results = suites.run_suite(args.suite)
	summary = suites.summary(args.suite, results)
	return exporters.render(summary, None, "json"), summary["passed"]


def main(argv: list[str] | None = None) -> int:
	"""
	Parse the arguments, run the subcommand and write its output.

	Args:
	    argv (list[str] | None): Arguments, sys.argv[1:] when omitted.

	Returns:
	    int: The exit code.
	"""
	parser = build_parser()
	args = parser.parse_args(argv)
	if args.command == "table" and (args.step < 1 or args.kmin > args.kmax):
		parser.error(f"invalid range {args.kmin}..{args.kmax} with step {args.step}")
	if args.command == "coeffs" and args.solution and args.order < 1:
		parser.error("--solution needs --order >= 1")
	logger = logging.SingletonLogger()
	logger.set_level("WARNING" if args.quiet else "INFO")
	passed = True
	try:
		if args.command == "verify":
			text, passed = run_verify(args)
		else:
			runner = {
				"count": run_count,
				"coeffs": run_coeffs,
				"asymptotics": run_asymptotics,
				"table": run_table,
			}[args.command]
			text = runner(args)
	except error.SignAmbiguity as exc:
		logger.log_error(str(exc))
		return EXIT_SIGN
	except (InvariantFailure, ArithmeticError, ValueError, IndexError) as exc:
		logger.log_error(str(exc))
		return EXIT_INVARIANT
	exporters.write_output(text, args.out)
	return EXIT_OK if passed else EXIT_INVARIANT
