#!/usr/bin/env python3
"""
Exporters Module

This module turns the results of the package into JSON payloads and pandas frames, and
renders them deterministically. Big integers are written as decimal strings in JSON,
rational coefficients as "p/q" and floats with 15 significant digits. Frames are
sorted and written without index.

Functions:
* counts_frame(table: CountTable) -> pd.DataFrame: Non-zero counts, columns i, j, k, count.
* counts_payload(table: CountTable) -> dict: JSON payload of the counts.
* series_frame(series: TruncSeries, walk: str, i: int, j: int) -> pd.DataFrame: Coefficients.
* series_payload(series: TruncSeries, walk: str, i: int, j: int) -> dict: JSON payload of q_{i,j}.
* solution_payload(solution: CompensationSolution, pairs) -> dict: q_{i,j}, c and identities of the main walk.
* rational_payload(solution: RationalSolution, pairs) -> dict: The same for the rational walk.
* bigstep_payload(ladder: BigStepLadder, pairs) -> dict: The same for the big step walk.
* solution_frame(payload: dict) -> pd.DataFrame: Coefficients of a solution payload.
* report_frame(report: AsymptoticReport) -> pd.DataFrame: Growth constants with the table rows.
* report_payload(report: AsymptoticReport) -> dict: JSON payload of the report.
* table_frame(table: pd.DataFrame) -> pd.DataFrame: The growth table with exact counts as strings.
* table_payload(table: pd.DataFrame) -> dict: JSON payload of the growth table.
* render(payload: dict, frame: pd.DataFrame, output_format: str) -> str: The text to emit.
* write_output(text: str, path: Path | None) -> None: Write to a file or stdout.
"""
import json
import sys
from pathlib import Path
import pandas as pd
from ..asymptotics.growth import AsymptoticReport
from ..compensation.solver import CompensationSolution, check_boundary_identities
from ..series.trunc_series import TruncSeries
from ..utils import helpers
from ..variants.big_step_walk import BigStepLadder, q_bigstep
from ..variants.rational_walk import RationalSolution
from ..walks.walk_dp import CountTable

REPORT_COLUMNS = [
	"rho_lo",
	"rho_hi",
	"h_prime",
	"h_prime_err",
	"C00",
	"C00_err",
	"total_const",
	"axis_const",
]
TABLE_COLUMNS = ["k", "exact", "approx", "ratio"]
REPORT_CSV_COLUMNS = REPORT_COLUMNS + TABLE_COLUMNS
SOLUTION_COLUMNS = ["walk", "i", "j", "n", "coefficient"]


def counts_frame(table: CountTable) -> pd.DataFrame:
	frame = table.to_frame()
	frame["count"] = frame["count"].map(str)
	return frame


def counts_payload(table: CountTable) -> dict:
	"""
	JSON payload of a count table.

	Args:
	    table (CountTable): The counts.

	Returns:
	    dict: {"walk", "kmax", "bound", "rows": [{"i", "j", "k", "count"}]}.
	"""
	frame = table.to_frame()
	rows = [
		{"i": int(i), "j": int(j), "k": int(k), "count": str(count)}
		for i, j, k, count in zip(frame["i"], frame["j"], frame["k"], frame["count"])
	]
	return {
		"walk": table.rule.name,
		"kmax": table.kmax,
		"bound": table.bound,
		"rows": rows,
	}


def series_frame(series: TruncSeries, walk: str, i: int, j: int) -> pd.DataFrame:
	"""
	The coefficients of q_{i,j} as rows (walk, i, j, n, coefficient).
	"""
	return pd.DataFrame(
		{
			"walk": [walk] * len(series),
			"i": [i] * len(series),
			"j": [j] * len(series),
			"n": list(range(len(series))),
			"coefficient": [helpers.coefficient_to_str(c) for c in series],
		}
	)


def series_payload(series: TruncSeries, walk: str, i: int, j: int) -> dict:
	return {
		"walk": walk,
		"i": i,
		"j": j,
		"order": series.order,
		"coeffs": [helpers.coefficient_to_str(c) for c in series],
	}


def _coefficients(series: TruncSeries) -> list[str]:
	return [helpers.coefficient_to_str(c) for c in series]


def _solution_fields(
	walk: str, order: int, q_of: callable, pairs, c: TruncSeries, identities_ok: bool
) -> dict:
	return {
		"walk": walk,
		"order": order,
		"q": {f"{i},{j}": _coefficients(q_of(i, j)) for i, j in sorted(set(pairs))},
		"c": _coefficients(c),
		"identities_ok": bool(identities_ok),
	}


def solution_payload(solution: CompensationSolution, pairs) -> dict:
	"""
	JSON payload of the compensation solution of the main walk.

	identities_ok combines the normalisation of q_{0,0} and c with the boundary
	identities, checked to order p - 1 on the xhat series of the solution.

	Args:
	    solution (CompensationSolution): The solution of order p.
	    pairs (Iterable[tuple[int, int]]): The (i, j) to export.

	Returns:
	    dict: {"walk", "order", "q": {"i,j": [...]}, "c": [...], "identities_ok"}.
	"""
	order = solution.order
	identities_ok = solution.check_normalisation()
	if identities_ok and order >= 2:
		identities_ok = check_boundary_identities(order - 1, solution.xhat)
	return _solution_fields("main", order, solution.q, pairs, solution.c, identities_ok)


def rational_payload(solution: RationalSolution, pairs) -> dict:
	"""
	JSON payload of the rational walk, with c = c_0 and the fixed point relations
	as identities_ok.
	"""
	return _solution_fields(
		"rational_gf",
		solution.order,
		solution.q,
		pairs,
		solution.c0,
		solution.check_relations(),
	)


def bigstep_payload(ladder: BigStepLadder, pairs) -> dict:
	"""
	JSON payload of the big step walk, with c = c_0 and the valuation and recurrence
	laws of the ladder as identities_ok.
	"""
	order = ladder.order

	def q_of(i: int, j: int) -> TruncSeries:
		return q_bigstep(i, j, order, ladder)

	return _solution_fields(
		"big_step",
		order,
		q_of,
		pairs,
		ladder.cs[0].truncate(order),
		ladder.valuations_ok() and ladder.recurrences_ok(),
	)


def solution_frame(payload: dict) -> pd.DataFrame:
	"""
	The q_{i,j} of a solution payload as rows (walk, i, j, n, coefficient).

	Args:
	    payload (dict): Output of solution_payload, rational_payload or bigstep_payload.

	Returns:
	    pd.DataFrame: The coefficients, sorted by i, j and n.
	"""
	rows = []
	for key, coeffs in payload["q"].items():
		i, j = (int(part) for part in key.split(","))
		rows.extend((payload["walk"], i, j, n, c) for n, c in enumerate(coeffs))
	frame = pd.DataFrame(rows, columns=SOLUTION_COLUMNS)
	return frame.sort_values(["i", "j", "n"], ignore_index=True)


def _report_values(report: AsymptoticReport) -> dict:
	values = {
		"rho_lo": report.rho.lo,
		"rho_hi": report.rho.hi,
		"h_prime": report.h_prime_rho,
		"h_prime_err": report.h_prime_err,
		"C00": report.C00,
		"C00_err": report.C00_err,
		"total_const": report.total_const,
		"axis_const": report.axis_const,
	}
	return {key: helpers.round_float(value) for key, value in values.items()}


def report_frame(report: AsymptoticReport) -> pd.DataFrame:
	"""
	The report for CSV: one row per table row, the constants repeated on every row.
	Without a table there is a single row with empty table columns.

	Args:
	    report (AsymptoticReport): The report.

	Returns:
	    pd.DataFrame: Columns REPORT_COLUMNS followed by TABLE_COLUMNS.
	"""
	constants = _report_values(report)
	if report.table is None:
		return pd.DataFrame([constants], columns=REPORT_CSV_COLUMNS)
	frame = table_frame(report.table)
	for position, column in enumerate(REPORT_COLUMNS):
		frame.insert(position, column, constants[column])
	return frame


def table_frame(table: pd.DataFrame) -> pd.DataFrame:
	"""
	The growth table ready for CSV: exact counts and approximations as decimal strings,
	ratios rounded.

	Args:
	    table (pd.DataFrame): Output of growth_table.

	Returns:
	    pd.DataFrame: Columns k, exact, approx, ratio sorted by k.
	"""
	frame = table.sort_values("k").reset_index(drop=True)
	return pd.DataFrame(
		{
			"k": frame["k"].astype("int64"),
			"exact": frame["exact"].map(str),
			"approx": frame["approx"].map(helpers.decimal_to_str),
			"ratio": frame["ratio"].map(helpers.round_float),
		},
		columns=TABLE_COLUMNS,
	)


def table_payload(table: pd.DataFrame) -> dict:
	frame = table_frame(table)
	rows = [
		{
			"k": int(k),
			"exact": exact,
			"approx": approx,
			"ratio": helpers.round_float(ratio),
		}
		for k, exact, approx, ratio in zip(
			frame["k"], frame["exact"], frame["approx"], frame["ratio"]
		)
	]
	return {"table": rows}


def report_payload(report: AsymptoticReport) -> dict:
	"""
	JSON payload of an asymptotic report.

	Args:
	    report (AsymptoticReport): The report.

	Returns:
	    dict: The scalar constants, "Cij" keyed by "i,j" and "table" when present.
	"""
	payload = _report_values(report)
	payload["tail_depth"] = report.rho.tail_depth
	payload["Cij"] = {
		f"{i},{j}": helpers.round_float(value)
		for (i, j), value in sorted(report.Cij.items())
	}
	if report.table is not None:
		payload.update(table_payload(report.table))
	return payload


def render(payload: dict, frame: pd.DataFrame, output_format: str) -> str:
	"""
	Render a result as text.

	Args:
	    payload (dict): The JSON payload.
	    frame (pd.DataFrame): The frame written for CSV.
	    output_format (str): "json" or "csv".

	Returns:
	    str: The text, ending in a newline.

	Raises:
	    ValueError: For an unknown format.
	"""
	if output_format == "json":
		return json.dumps(payload, indent=2) + "\n"
	if output_format == "csv":
		return frame.to_csv(index=False, lineterminator="\n")
	raise ValueError(
		f"Unknown output format '{output_format}', use one of {helpers.OUTPUT_FORMATS}."
	)


def write_output(text: str, path: Path | None = None) -> None:
	"""
	Write the rendered text to a file, or to stdout without a path.

	Args:
	    text (str): The text.
	    path (Path | None): Target file.
	"""
	if path is None:
		sys.stdout.write(text)
		sys.stdout.flush()
		return
	path = Path(path)
	path.parent.mkdir(parents=True, exist_ok=True)
	path.write_text(text, encoding="utf-8")
