#!/usr/bin/env python3
"""
Step Rules Module

This module defines the StepRule class: the region dependent step sets of a walk in
the quarter plane. A state (i, j) lies in one of four regions, the interior
(i, j > 0), the horizontal boundary (i > 0, j = 0), the vertical boundary
(i = 0, j > 0) or the origin, and every region has its own set of small steps.
A rule may also carry the big step (i, 0) -> (0, i) on the horizontal boundary.

Attributes:
* REGIONS: The names of the four regions.

Classes:
* StepRule: The step sets of a walk, validated at construction.

Functions:
* region_of(i: int, j: int) -> str: The region of a state.
* builtin_rule(name: str) -> StepRule: One of the builtin walks.
* incoming_sources(rule: StepRule, i: int, j: int) -> list[tuple[int, int]]: States reaching (i, j) in one step.
"""
from ..errors import error

REGIONS = ("interior", "horizontal", "vertical", "origin")


def region_of(i: int, j: int) -> str:
	"""
	The region of the state (i, j).

	Args:
	    i (int): First coordinate, >= 0.
	    j (int): Second coordinate, >= 0.

	Returns:
	    str: One of REGIONS.
	"""
	if i > 0 and j > 0:
		return "interior"
	if i > 0:
		return "horizontal"
	if j > 0:
		return "vertical"
	return "origin"


def _validate(region: str, steps) -> tuple[tuple[int, int], ...]:
	checked = []
	for step in steps:
		dx, dy = step
		if abs(dx) > 1 or abs(dy) > 1:
			raise error.InvalidStepRule(region, (dx, dy))
		if region in ("vertical", "origin") and dx < 0:
			raise error.InvalidStepRule(region, (dx, dy))
		if region in ("horizontal", "origin") and dy < 0:
			raise error.InvalidStepRule(region, (dx, dy))
		checked.append((dx, dy))
	if len(set(checked)) != len(checked):
		raise ValueError(f"Duplicate steps in the '{region}' region.")
	return tuple(sorted(checked))


class StepRule:
	"""
	The four region step sets of a walk in the quarter plane.

	Attributes:
	    name (str): Name of the walk.
	    interior (tuple[tuple[int, int], ...]): Steps from (i, j), i, j > 0.
	    horizontal (tuple[tuple[int, int], ...]): Small steps from (i, 0), i > 0.
	    vertical (tuple[tuple[int, int], ...]): Steps from (0, j), j > 0.
	    origin (tuple[tuple[int, int], ...]): Steps from (0, 0).
	    big_step (bool): Whether (i, 0) -> (0, i) is allowed from the horizontal boundary.
	"""

	def __init__(
		self,
		name: str,
		interior,
		horizontal,
		vertical,
		origin,
		big_step: bool = False,
	) -> None:
		"""
		Initialize the rule and check every small step stays in the quarter plane.

		Args:
		    name (str): Name of the walk.
		    interior (Iterable[tuple[int, int]]): Interior steps.
		    horizontal (Iterable[tuple[int, int]]): Horizontal boundary steps.
		    vertical (Iterable[tuple[int, int]]): Vertical boundary steps.
		    origin (Iterable[tuple[int, int]]): Origin steps.
		    big_step (bool): Attach the big step to the horizontal boundary.

		Raises:
		    InvalidStepRule: If a step leaves the quarter plane from its region.
		"""
		self._name = name
		self._steps = {
			"interior": _validate("interior", interior),
			"horizontal": _validate("horizontal", horizontal),
			"vertical": _validate("vertical", vertical),
			"origin": _validate("origin", origin),
		}
		self._big_step = bool(big_step)

	@property
	def name(self) -> str:
		return self._name

	@property
	def interior(self) -> tuple[tuple[int, int], ...]:
		return self._steps["interior"]

	@property
	def horizontal(self) -> tuple[tuple[int, int], ...]:
		return self._steps["horizontal"]

	@property
	def vertical(self) -> tuple[tuple[int, int], ...]:
		return self._steps["vertical"]

	@property
	def origin(self) -> tuple[tuple[int, int], ...]:
		return self._steps["origin"]

	@property
	def big_step(self) -> bool:
		return self._big_step

	def steps(self, region: str) -> tuple[tuple[int, int], ...]:
		"""
		The small steps of a region.

		Args:
		    region (str): One of REGIONS.

		Returns:
		    tuple[tuple[int, int], ...]: The steps.
		"""
		return self._steps[region]

	def out_degree(self, region: str) -> int:
		"""Number of outgoing steps from a state in the region, the big step included."""
		extra = 1 if self._big_step and region == "horizontal" else 0
		return len(self._steps[region]) + extra

	def __eq__(self, other) -> bool:
		if not isinstance(other, StepRule):
			return NotImplemented
		return self._steps == other._steps and self._big_step == other._big_step

	def __hash__(self) -> int:
		return hash((tuple(self._steps.items()), self._big_step))

	def __repr__(self) -> str:
		return (
			f"StepRule(name={self._name!r}, interior={self.interior}, "
			f"horizontal={self.horizontal}, vertical={self.vertical}, "
			f"origin={self.origin}, big_step={self._big_step})"
		)


_BUILTIN = {
	"main": dict(
		interior=[(-1, 1), (-1, -1), (1, -1)],
		horizontal=[(-1, 1), (-1, 0), (1, 0)],
		vertical=[(0, 1), (0, -1), (1, -1)],
		origin=[(0, 1), (1, 0)],
	),
	"rational_gf": dict(
		interior=[(-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0)],
		horizontal=[(-1, 0), (1, 0)],
		vertical=[(0, 1), (0, -1), (1, -1), (1, 0)],
		origin=[(0, 1), (1, 0)],
	),
	"big_step": dict(
		interior=[(-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0)],
		horizontal=[(-1, 0), (1, 0)],
		vertical=[(0, -1), (1, -1), (1, 0)],
		origin=[(1, 0)],
		big_step=True,
	),
}


def builtin_rule(name: str) -> StepRule:
	"""
	One of the builtin walks: "main", "rational_gf" or "big_step".

	Args:
	    name (str): Name of the walk.

	Returns:
	    StepRule: The rule.

	Raises:
	    UnknownRule: If the name is not a builtin walk.
	"""
	if name not in _BUILTIN:
		raise error.UnknownRule(name)
	return StepRule(name, **_BUILTIN[name])


def incoming_sources(rule: StepRule, i: int, j: int) -> list[tuple[int, int]]:
	"""
	All states that reach (i, j) in one step, with multiplicity.

	This is the backward view of the rule used by the recursions
	q_{i,j,k+1} = sum of q_{src,k} over the sources.

	Args:
	    rule (StepRule): The walk.
	    i (int): First coordinate of the target.
	    j (int): Second coordinate of the target.

	Returns:
	    list[tuple[int, int]]: The sources, sorted.
	"""
	sources = []
	for region in REGIONS:
		for dx, dy in rule.steps(region):
			source = (i - dx, j - dy)
			if min(source) < 0:
				continue
			if region_of(*source) == region:
				sources.append(source)
	if rule.big_step and i == 0 and j > 0:
		sources.append((j, 0))
	return sorted(sources)
