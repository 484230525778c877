#!/usr/bin/env python3
"""
Unit tests for the `QuarterWalkComp.export.exporters` module.
"""
import json
import math
import tempfile
import unittest
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from unittest import mock
import pandas as pd
from QuarterWalkComp.asymptotics.growth import AsymptoticReport
from QuarterWalkComp.asymptotics.singularity import RhoBracket
from QuarterWalkComp.compensation.solver import CompensationSolution
from QuarterWalkComp.export import exporters
from QuarterWalkComp.series.trunc_series import TruncSeries
from QuarterWalkComp.utils import helpers
from QuarterWalkComp.variants.big_step_walk import build_bigstep
from QuarterWalkComp.variants.rational_walk import solve_rational
from QuarterWalkComp.walks.walk_dp import dp_counts

MAIN_ORIGIN_COUNTS = [1, 0, 2, 2, 10, 16, 64, 126, 454, 1004, 3404]


def _report(table=None):
	return AsymptoticReport(
		RhoBracket(0.3449997, 0.3449998, 12),
		-5.5,
		1e-7,
		0.0531234567890123456,
		2e-9,
		{(0, 1): 0.02, (1, 0): 0.02},
		0.52,
		0.37,
		table,
	)


def _table():
	return pd.DataFrame(
		{
			"k": [20, 10],
			"exact": pd.Series([0, 3404], dtype=object),
			"approx": pd.Series([Decimal("1.5"), Decimal("2223.0")], dtype=object),
			"ratio": [math.nan, 0.653],
		}
	)


class TestCounts(unittest.TestCase):
	def test_csv(self):
		table = dp_counts("main", 10)
		text = exporters.render(
			exporters.counts_payload(table), exporters.counts_frame(table), "csv"
		)
		lines = text.splitlines()
		self.assertEqual(lines[0], "i,j,k,count")
		self.assertIn("0,0,10,3404", lines)
		self.assertTrue(text.endswith("\n"))

	def test_empty_walk(self):
		table = dp_counts("main", 0)
		frame = exporters.counts_frame(table)
		text = exporters.render(exporters.counts_payload(table), frame, "csv")
		self.assertEqual(text, "i,j,k,count\n0,0,0,1\n")
		payload = exporters.counts_payload(table)
		self.assertEqual(payload["rows"], [{"i": 0, "j": 0, "k": 0, "count": "1"}])
		self.assertEqual(payload["walk"], "main")
		self.assertEqual(payload["bound"], 1)
		self.assertEqual(exporters.counts_payload(dp_counts("main", 7))["bound"], 8)

	def test_big_counts_as_strings(self):
		table = dp_counts("main", 60)
		payload = exporters.counts_payload(table)
		counts = [row["count"] for row in payload["rows"]]
		self.assertTrue(all(isinstance(count, str) for count in counts))
		self.assertTrue(any(int(count) > 2**63 for count in counts))

	def test_deterministic(self):
		table = dp_counts("rational_gf", 12)
		first = exporters.render(
			exporters.counts_payload(table), exporters.counts_frame(table), "json"
		)
		second = exporters.render(
			exporters.counts_payload(dp_counts("rational_gf", 12)),
			exporters.counts_frame(table),
			"json",
		)
		self.assertEqual(first, second)


class TestSeries(unittest.TestCase):
	def test_payload(self):
		series = TruncSeries([1, 0, Fraction(2, 3)], 2)
		payload = exporters.series_payload(series, "main", 1, 2)
		self.assertEqual(
			payload,
			{"walk": "main", "i": 1, "j": 2, "order": 2, "coeffs": ["1", "0", "2/3"]},
		)

	def test_frame(self):
		series = TruncSeries([1, 0, 2], 2)
		frame = exporters.series_frame(series, "big_step", 0, 0)
		text = exporters.render({}, frame, "csv")
		self.assertEqual(
			text,
			"walk,i,j,n,coefficient\nbig_step,0,0,0,1\nbig_step,0,0,1,0\nbig_step,0,0,2,2\n",
		)


class TestSolution(unittest.TestCase):
	def test_main(self):
		solution = CompensationSolution(10)
		payload = exporters.solution_payload(solution, [(1, 1), (0, 0), (1, 0), (0, 0)])
		self.assertEqual(list(payload), ["walk", "order", "q", "c", "identities_ok"])
		self.assertEqual((payload["walk"], payload["order"]), ("main", 10))
		self.assertEqual(list(payload["q"]), ["0,0", "1,0", "1,1"])
		self.assertEqual(payload["q"]["0,0"], [str(n) for n in MAIN_ORIGIN_COUNTS])
		table = dp_counts("main", 10)
		self.assertEqual(
			payload["q"]["1,1"], [str(table.count(1, 1, k)) for k in range(11)]
		)
		self.assertEqual(payload["c"][:2], ["1", "2"])
		self.assertIs(payload["identities_ok"], True)

	def test_main_order_zero(self):
		payload = exporters.solution_payload(CompensationSolution(0), [(0, 0), (1, 0)])
		self.assertEqual(payload["q"], {"0,0": ["1"], "1,0": ["0"]})
		self.assertEqual(payload["c"], ["1"])
		self.assertTrue(payload["identities_ok"])

	def test_failed_identities(self):
		with mock.patch(
			"QuarterWalkComp.export.exporters.check_boundary_identities",
			return_value=False,
		):
			payload = exporters.solution_payload(CompensationSolution(6), [(0, 0)])
		self.assertIs(payload["identities_ok"], False)

	def test_rational(self):
		solution = solve_rational(8)
		payload = exporters.rational_payload(solution, [(1, 2), (0, 0)])
		table = dp_counts("rational_gf", 8)
		self.assertEqual(payload["walk"], "rational_gf")
		for i, j in ((0, 0), (1, 2)):
			with self.subTest(i=i, j=j):
				self.assertEqual(
					payload["q"][f"{i},{j}"], [str(table.count(i, j, k)) for k in range(9)]
				)
		self.assertEqual(payload["c"], [helpers.coefficient_to_str(c) for c in solution.c0])
		self.assertTrue(payload["identities_ok"])

	def test_big_step(self):
		payload = exporters.bigstep_payload(build_bigstep(8, 8), [(0, 0), (2, 1)])
		table = dp_counts("big_step", 8)
		self.assertEqual((payload["walk"], payload["order"]), ("big_step", 8))
		for i, j in ((0, 0), (2, 1)):
			with self.subTest(i=i, j=j):
				self.assertEqual(
					payload["q"][f"{i},{j}"], [str(table.count(i, j, k)) for k in range(9)]
				)
		self.assertEqual(payload["c"][0], "1")
		self.assertEqual(len(payload["c"]), 9)
		self.assertTrue(payload["identities_ok"])

	def test_frame(self):
		payload = exporters.rational_payload(solve_rational(3), [(0, 1), (0, 0)])
		frame = exporters.solution_frame(payload)
		self.assertEqual(list(frame.columns), exporters.SOLUTION_COLUMNS)
		self.assertEqual(len(frame), 8)
		text = exporters.render(payload, frame, "csv")
		lines = text.splitlines()
		self.assertEqual(lines[0], "walk,i,j,n,coefficient")
		self.assertEqual(lines[1], "rational_gf,0,0,0,1")
		self.assertTrue(lines[5].startswith("rational_gf,0,1,0,"))


class TestReport(unittest.TestCase):
	def test_payload(self):
		payload = exporters.report_payload(_report())
		self.assertEqual(payload["rho_lo"], 0.3449997)
		self.assertEqual(payload["C00"], 0.0531234567890123)
		self.assertEqual(payload["Cij"], {"0,1": 0.02, "1,0": 0.02})
		self.assertEqual(payload["tail_depth"], 12)
		self.assertNotIn("table", payload)

	def test_frame_without_table(self):
		frame = exporters.report_frame(_report())
		self.assertEqual(list(frame.columns), exporters.REPORT_COLUMNS + exporters.TABLE_COLUMNS)
		self.assertEqual(len(frame), 1)
		text = exporters.render({}, frame, "csv")
		self.assertTrue(text.splitlines()[1].endswith(",,,,"))

	def test_frame_with_table(self):
		frame = exporters.report_frame(_report(_table()))
		self.assertEqual(list(frame.columns), exporters.REPORT_CSV_COLUMNS)
		self.assertEqual(list(frame["k"]), [10, 20])
		self.assertEqual(list(frame["C00"]), [0.0531234567890123] * 2)
		self.assertEqual(list(frame["exact"]), ["3404", "0"])

	def test_table(self):
		payload = exporters.report_payload(_report(_table()))
		first = payload["table"][0]
		self.assertEqual((first["k"], first["exact"], first["ratio"]), (10, "3404", 0.653))
		self.assertEqual(Decimal(first["approx"]), Decimal("2223"))
		self.assertIsNone(payload["table"][1]["ratio"])
		json.loads(exporters.render(payload, None, "json"))
		text = exporters.render({}, exporters.table_frame(_table()), "csv")
		self.assertEqual(text.splitlines()[0], "k,exact,approx,ratio")
		k, exact, approx, ratio = text.splitlines()[1].split(",")
		self.assertEqual((k, exact, ratio), ("10", "3404", "0.653"))
		self.assertEqual(Decimal(approx), Decimal("2223"))

	def test_huge_approximation(self):
		table = pd.DataFrame(
			{
				"k": [1000],
				"exact": pd.Series([10**460], dtype=object),
				"approx": pd.Series([Decimal("1.0012345678901234567e460")], dtype=object),
				"ratio": [1.0012],
			}
		)
		row = exporters.table_payload(table)["table"][0]
		self.assertEqual(Decimal(row["approx"]), Decimal("1.00123456789012e460"))
		text = exporters.render(exporters.table_payload(table), None, "json")
		self.assertNotIn("Infinity", text)


class TestOutput(unittest.TestCase):
	def test_unknown_format(self):
		with self.assertRaises(ValueError):
			exporters.render({}, None, "xml")

	def test_write_file(self):
		with tempfile.TemporaryDirectory() as folder:
			path = Path(folder) / "nested" / "counts.csv"
			exporters.write_output("i,j,k,count\n0,0,0,1\n", path)
			self.assertEqual(path.read_text(encoding="utf-8"), "i,j,k,count\n0,0,0,1\n")


if __name__ == "__main__":
	unittest.main()
