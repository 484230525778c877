#!/usr/bin/env python3
"""
Walk DP Module

This module counts walks in the quarter plane exactly with a forward dynamic
programme: every layer k holds the number of walks of length k ending in each state,
and the next layer is built by pushing the counts along the outgoing steps of the
region of each state. Counts are Python integers held in numpy object arrays so they
never overflow.

The backward recursions and the functional equation of the main walk are kept as
independent checks of the tables.

Classes:
* CountTable: Exact counts q_{i,j,k} for k <= kmax.

Functions:
* dp_counts(rule: StepRule | str, kmax: int) -> CountTable: Forward evolution of the counts.
* origin_counts(rule: StepRule | str, kmax: int) -> list[int]: q_{0,0,k} on a rolling layer.
* marginals(table: CountTable, k: int) -> tuple[int, int]: Total and axis counts at length k.
* check_functional_equation(table: CountTable, imax: int, jmax: int, kmax: int) -> bool: Kernel equation of the main walk.
* check_backward_recursions(table: CountTable) -> bool: Recursions q_{i,j,k+1} = sum of sources.
* check_series_recursions(rule: StepRule, q_of: callable, imax: int, jmax: int, order: int) -> bool: Same recursions on generating functions.
"""
import numpy as np
import pandas as pd
from ..errors import error
from ..series.trunc_series import TruncSeries
from ..utils import helpers, logging
from .step_rules import REGIONS, StepRule, builtin_rule, incoming_sources


class CountTable:
	"""
	Exact counts q_{i,j,k}: the number of walks of length k from (0, 0) to (i, j).

	Attributes:
	    rule (StepRule): The walk the table was built for.
	    kmax (int): Largest length.
	    bound (int): Grid cap, kmax + 1 in each coordinate.
	"""

	def __init__(self, rule: StepRule, layers: np.ndarray) -> None:
		"""
		Initialize the table.

		Args:
		    rule (StepRule): The walk.
		    layers (np.ndarray): Object array of shape (kmax + 1, bound, bound).
		"""
		self._rule = rule
		self._layers = layers

	@property
	def rule(self) -> StepRule:
		return self._rule

	@property
	def kmax(self) -> int:
		return self._layers.shape[0] - 1

	@property
	def bound(self) -> int:
		return self._layers.shape[1]

	def _check_k(self, k: int) -> None:
		if not 0 <= k <= self.kmax:
			raise error.OutOfRange(k, self.kmax)

	def count(self, i: int, j: int, k: int) -> int:
		"""
		The number of walks of length k ending in (i, j).

		Args:
		    i (int): First coordinate.
		    j (int): Second coordinate.
		    k (int): Length, 0 <= k <= kmax.

		Returns:
		    int: The count, 0 outside of the grid.

		Raises:
		    OutOfRange: If k is outside of the table.
		"""
		self._check_k(k)
		if i < 0 or j < 0 or i >= self.bound or j >= self.bound:
			return 0
		return int(self._layers[k, i, j])

	def layer(self, k: int) -> np.ndarray:
		"""A copy of the layer of length k."""
		self._check_k(k)
		return self._layers[k].copy()

	def with_count(self, i: int, j: int, k: int, value: int) -> "CountTable":
		"""
		A copy of the table with one count replaced.

		Args:
		    i (int): First coordinate.
		    j (int): Second coordinate.
		    k (int): Length.
		    value (int): New count.

		Returns:
		    CountTable: The modified copy.
		"""
		self._check_k(k)
		layers = self._layers.copy()
		layers[k, i, j] = int(value)
		return CountTable(self._rule, layers)

	def to_frame(self) -> pd.DataFrame:
		"""
		The non-zero counts as a DataFrame with columns i, j, k, count,
		sorted by k, i, j. Counts are Python integers.

		Returns:
		    pd.DataFrame: The counts.
		"""
		ks, iis, jjs = np.nonzero(self._layers != 0)
		frame = pd.DataFrame(
			{
				"i": iis.astype(int),
				"j": jjs.astype(int),
				"k": ks.astype(int),
				"count": pd.Series(
					[int(self._layers[k, i, j]) for k, i, j in zip(ks, iis, jjs)],
					dtype=object,
				),
			}
		)
		return frame.sort_values(["k", "i", "j"], ignore_index=True)

	def __repr__(self) -> str:
		return f"CountTable(rule={self._rule.name!r}, kmax={self.kmax})"


def _region_bounds(region: str, size: int) -> tuple[tuple[int, int], tuple[int, int]]:
	inner = (1, size - 1)
	edge = (0, 1)
	return {
		"interior": (inner, inner),
		"horizontal": (inner, edge),
		"vertical": (edge, inner),
		"origin": (edge, edge),
	}[region]


@helpers.check_int_args("kmax")
def dp_counts(rule: StepRule | str, kmax: int) -> CountTable:
	"""
	Count the walks of every length up to kmax by forward evolution.

	Args:
	    rule (StepRule | str): The walk or the name of a builtin walk.
	    kmax (int): Largest length, >= 0.

	Returns:
	    CountTable: The exact counts.
	"""
	if isinstance(rule, str):
		rule = builtin_rule(rule)
	logger = logging.SingletonLogger()
	logger.log_info(f"Counting '{rule.name}' walks up to length {kmax}")
	size = kmax + 1
	layers = np.zeros((kmax + 1, size, size), dtype=object)
	layers[0, 0, 0] = 1
	for k in range(kmax):
		_advance(rule, layers[k], layers[k + 1], size)
	logger.log_debug(f"Counted {int(layers[kmax].sum())} walks of length {kmax}")
	return CountTable(rule, layers)


def _advance(rule: StepRule, old: np.ndarray, new: np.ndarray, size: int) -> None:
	"""
	Push the counts of old[:size, :size] along one step into new. Sources in the
	last row and column of the window are dropped.
	"""
	for region in REGIONS:
		(i0, i1), (j0, j1) = _region_bounds(region, size)
		if i1 <= i0 or j1 <= j0:
			continue
		for dx, dy in rule.steps(region):
			new[i0 + dx : i1 + dx, j0 + dy : j1 + dy] += old[i0:i1, j0:j1]
	if rule.big_step and size > 2:
		new[0, 1 : size - 1] += old[1 : size - 1, 0]


@helpers.check_int_args("kmax")
def origin_counts(rule: StepRule | str, kmax: int) -> list[int]:
	"""
	The counts q_{0,0,k} for k = 0..kmax, keeping a single layer in memory.

	Every step moves each coordinate by at most one and the big step keeps
	max(i, j), so a walk that is back at the origin by length kmax never leaves
	max(i, j) <= min(k, kmax - k). Only that window of the layer is evolved.

	Args:
	    rule (StepRule | str): The walk or the name of a builtin walk.
	    kmax (int): Largest length, >= 0.

	Returns:
	    list[int]: q_{0,0,0}, ..., q_{0,0,kmax}.
	"""
	if isinstance(rule, str):
		rule = builtin_rule(rule)
	logging.SingletonLogger().log_info(
		f"Counting '{rule.name}' walks back at the origin up to length {kmax}"
	)
	size = kmax // 2 + 2
	layer = np.zeros((size, size), dtype=object)
	layer[0, 0] = 1
	counts = [1]
	for k in range(kmax):
		window = min(min(k, kmax - k) + 2, size)
		new = np.zeros((size, size), dtype=object)
		_advance(rule, layer[:window, :window], new[:window, :window], window)
		layer = new
		counts.append(int(layer[0, 0]))
	return counts


def marginals(table: CountTable, k: int) -> tuple[int, int]:
	"""
	The total number of walks of length k and the number ending on the horizontal axis.

	Args:
	    table (CountTable): The counts.
	    k (int): Length.

	Returns:
	    tuple[int, int]: (total, axis).

	Raises:
	    OutOfRange: If k is outside of the table.
	"""
	layer = table.layer(k)
	return int(layer.sum()), int(layer[:, 0].sum())


def check_functional_equation(
	table: CountTable, imax: int, jmax: int, kmax: int
) -> bool:
	"""
	Compare the coefficients of x^i y^j z^k of both sides of the kernel equation of the
	main walk, multiplied by z:

	(z + z x^2 + z y^2 - x y) Q = z (1 + x^2 - x^2 y - y) Q(x, 0)
	    + z (1 + y^2 - x y^2 - x) Q(0, y) + z (x + y - 1) Q(0, 0) - x y.

	Args:
	    table (CountTable): Counts of the main walk.
	    imax (int): Largest power of x.
	    jmax (int): Largest power of y.
	    kmax (int): Largest power of z, at most table.kmax.

	Returns:
	    bool: True if all coefficients agree.

	Raises:
	    WrongRule: If the table was not built for the main walk.
	    OutOfRange: If kmax exceeds the table.
	"""
	if table.rule != builtin_rule("main"):
		raise error.WrongRule("main", table.rule.name)
	if kmax > table.kmax:
		raise error.OutOfRange(kmax, table.kmax)

	def q(i: int, j: int, k: int) -> int:
		if i < 0 or j < 0 or k < 0:
			return 0
		return table.count(i, j, k)

	for k in range(kmax + 1):
		for i in range(imax + 1):
			for j in range(jmax + 1):
				lhs = q(i, j, k - 1) + q(i - 2, j, k - 1) + q(i, j - 2, k - 1)
				lhs -= q(i - 1, j - 1, k)
				rhs = 0
				if j == 0:
					rhs += q(i, 0, k - 1) + q(i - 2, 0, k - 1)
				if j == 1:
					rhs -= q(i - 2, 0, k - 1) + q(i, 0, k - 1)
				if i == 0:
					rhs += q(0, j, k - 1) + q(0, j - 2, k - 1)
				if i == 1:
					rhs -= q(0, j - 2, k - 1) + q(0, j, k - 1)
				corner = int((i, j) in ((1, 0), (0, 1))) - int((i, j) == (0, 0))
				rhs += q(0, 0, k - 1) * corner
				if (i, j, k) == (1, 1, 0):
					rhs -= 1
				if lhs != rhs:
					logging.SingletonLogger().log_warning(
						f"Kernel equation fails at x^{i} y^{j} z^{k}: {lhs} != {rhs}"
					)
					return False
	return True


def check_backward_recursions(table: CountTable) -> bool:
	"""
	Check q_{i,j,k+1} = sum of q_{src,k} over the incoming sources of (i, j) for every
	state of the grid and every k < kmax.

	Args:
	    table (CountTable): The counts.

	Returns:
	    bool: True if every recursion holds exactly.
	"""
	size = table.bound
	sources = {
		(i, j): [s for s in incoming_sources(table.rule, i, j) if max(s) < size]
		for i in range(size)
		for j in range(size)
	}
	for k in range(table.kmax):
		old = table.layer(k)
		new = table.layer(k + 1)
		for (i, j), cell_sources in sources.items():
			if new[i, j] != sum(old[s] for s in cell_sources):
				logging.SingletonLogger().log_warning(
					f"Backward recursion fails at ({i}, {j}) for length {k + 1}"
				)
				return False
	return True


def check_series_recursions(
	rule: StepRule, q_of: callable, imax: int, jmax: int, order: int
) -> bool:
	"""
	Check the recursions on generating functions, q_{i,j} = [i = j = 0] + z * sum of
	q_src, as identities between truncated series.

	Args:
	    rule (StepRule): The walk.
	    q_of (callable): Maps (i, j) to the series q_{i,j}, of order >= order.
	    imax (int): Largest i to check.
	    jmax (int): Largest j to check.
	    order (int): Order of the comparison.

	Returns:
	    bool: True if all identities hold modulo z^(order+1).
	"""
	cache = {}

	def q(i: int, j: int) -> TruncSeries:
		if (i, j) not in cache:
			cache[(i, j)] = q_of(i, j).truncate(order)
		return cache[(i, j)]

	for i in range(imax + 1):
		for j in range(jmax + 1):
			total = TruncSeries.zero(order)
			for source in incoming_sources(rule, i, j):
				total = total + q(*source)
			rhs = total.mul_z(1).truncate(order) + int(i == j == 0)
			if q(i, j) != rhs:
				logging.SingletonLogger().log_warning(
					f"Series recursion of '{rule.name}' fails at ({i}, {j})"
				)
				return False
	return True
