#!/usr/bin/env python3
"""
Compensation Solver Module

This module assembles the generating functions q_{i,j}(z) of the main walk from the
compensation ladder. The solution is written as an alternating sum of product forms,

x_{i,j} = sum_k (1 - beta_k) beta_k^j [(1 - alpha_k) alpha_k^i - (1 - alpha_{k+1}) alpha_{k+1}^i],

symmetrised into xhat_{i,j} = x_{i,j} + x_{j,i}, and normalised by
c = 1 / (1 - 2z + z xhat_{0,0}):

q_{0,0} = c (1 + xhat_{0,0}),   q_{i,j} = c xhat_{i,j} for (i, j) != (0, 0).

Only finitely many rungs contribute to the coefficients up to z^p; the number is given
by truncation_bound. The sum for x_{i,0} is evaluated in its telescoped form
a_0 - [i = 0] - sum_k beta_k (a_k - a_{k+1}), a_k = (1 - alpha_k) alpha_k^i, whose
terms vanish to the same order as those of x_{i,j}, j >= 1.

Classes:
* CompensationSolution: The series xhat_{i,j}, c and q_{i,j} at a fixed order.

Functions:
* truncation_bound(i: int, j: int, p: int) -> int: Number of rungs needed for z^0..z^p.
* ladder_depth(p: int, pairs, margin: int) -> int: Ladder depth used for a target order.
* xhat_series(i: int, j: int, p: int, ladder: AlphaBetaLadder | None) -> TruncSeries: xhat_{i,j}.
* q_series(i: int, j: int, p: int) -> TruncSeries: The generating function q_{i,j}.
* check_boundary_identities(p: int, xhat: callable | None) -> bool: The two boundary identities.
* special_values(p: int) -> tuple: q_{0,0}, Q(1,0;z) and Q(1,1;z).
* pole_term_coefficients(ladder: AlphaBetaLadder, k: int, n_max: int) -> list: x-expansion of a pole term.
* boundary_gf_coefficient(n: int, p: int) -> TruncSeries: q_{n,0} from the partial fractions of Q(x,0;z).
"""
import math
from ..errors import error
from ..series.trunc_series import TruncSeries
from ..utils import helpers, logging
from .ladder import AlphaBetaLadder, build_ladder


@helpers.check_int_args("i", "j", "p")
def truncation_bound(i: int, j: int, p: int) -> int:
	"""
	The number of rungs whose terms reach the coefficients z^0..z^p of x_{i,j}:

	N = 1 + floor(max{p - (i v 1 + 2 (j v 1)), p - (2 (i v 1) + j v 1)} / 4),

	and 0 when the maximum is negative.

	Args:
	    i (int): First index.
	    j (int): Second index.
	    p (int): Target order.

	Returns:
	    int: The bound.
	"""
	vi, vj = max(i, 1), max(j, 1)
	largest = max(p - (vi + 2 * vj), p - (2 * vi + vj))
	if largest < 0:
		return 0
	return 1 + largest // 4


def ladder_depth(
	p: int, pairs=((0, 0),), margin: int = helpers.WalkDefaults.DEPTH_MARGIN
) -> int:
	"""
	The ladder depth used for coefficients up to z^p of the requested pairs.

	Args:
	    p (int): Target order.
	    pairs (Iterable[tuple[int, int]]): Requested (i, j); (0, 0) is always included.
	    margin (int): Extra rungs.

	Returns:
	    int: max(N over the pairs, 1) + margin.
	"""
	bounds = [truncation_bound(i, j, p) for i, j in (*pairs, (0, 0))]
	return max(*bounds, 1) + margin


def _build_for(p: int, depth: int) -> AlphaBetaLadder:
	return build_ladder(depth, max(p, 2 * depth + 2))


def _x_component(
	alphas: list[TruncSeries], betas: list[TruncSeries], i: int, j: int, terms: int
) -> TruncSeries:
	def a(k: int) -> TruncSeries:
		return (1 - alphas[k]) * alphas[k] ** i

	if j == 0:
		result = a(0) - int(i == 0)
		for k in range(terms):
			result = result - betas[k] * (a(k) - a(k + 1))
		return result
	result = TruncSeries.zero(alphas[0].order)
	for k in range(terms):
		result = result + (1 - betas[k]) * betas[k] ** j * (a(k) - a(k + 1))
	return result


def xhat_series(
	i: int, j: int, p: int, ladder: AlphaBetaLadder | None = None
) -> TruncSeries:
	"""
	The series xhat_{i,j} = x_{i,j} + x_{j,i} up to z^p.

	Args:
	    i (int): First index.
	    j (int): Second index.
	    p (int): Target order.
	    ladder (AlphaBetaLadder | None): Ladder to use, built with the default depth
	        policy when omitted.

	Returns:
	    TruncSeries: xhat_{i,j} of order p.

	Raises:
	    InsufficientDepth: If the ladder has fewer rungs than truncation_bound(i, j, p).
	"""
	needed = truncation_bound(i, j, p)
	if ladder is None:
		ladder = _build_for(p, ladder_depth(p, [(i, j)]))
	if ladder.K < needed:
		raise error.InsufficientDepth(ladder.K, needed)
	if ladder.order < p:
		raise ValueError(f"The ladder has order {ladder.order}, need {p}.")
	alphas = [alpha.truncate(p) for alpha in ladder.alphas[: needed + 1]]
	betas = [beta.truncate(p) for beta in ladder.betas[: needed + 1]]
	return _x_component(alphas, betas, i, j, needed) + _x_component(
		alphas, betas, j, i, needed
	)


class CompensationSolution:
	"""
	The compensation solution of the main walk up to z^order.

	Attributes:
	    order (int): Target order p.
	    ladder (AlphaBetaLadder | None): The ladder, None for order 0.
	    c (TruncSeries): 1 / (1 - 2z + z xhat_{0,0}).
	"""

	def __init__(
		self,
		order: int,
		ladder: AlphaBetaLadder | None = None,
		margin: int = helpers.WalkDefaults.DEPTH_MARGIN,
	) -> None:
		"""
		Initialize the solution, building a ladder when none is given.

		Args:
		    order (int): Target order p, >= 0.
		    ladder (AlphaBetaLadder | None): Ladder to reuse.
		    margin (int): Depth margin of the default ladder.
		"""
		if not isinstance(order, int) or order < 0:
			raise ValueError(
				f"Input 'order' must be a non-negative integer, got {order}."
			)
		self._order = order
		self._xhat = {}
		if order == 0:
			self._ladder = None
			self._c = TruncSeries.one(0)
			return
		self._ladder = ladder or _build_for(order, ladder_depth(order, margin=margin))
		x00 = self.xhat(0, 0)
		denominator = 1 - 2 * TruncSeries.z(order) + self._z_times(x00)
		self._c = TruncSeries.one(order) / denominator

	def _z_times(self, series: TruncSeries) -> TruncSeries:
		return series.mul_z(1).truncate(self._order)

	@property
	def order(self) -> int:
		return self._order

	@property
	def ladder(self) -> AlphaBetaLadder | None:
		return self._ladder

	@property
	def c(self) -> TruncSeries:
		return self._c

	def xhat(self, i: int, j: int) -> TruncSeries:
		"""
		The series xhat_{i,j} of the solution.

		Args:
		    i (int): First index.
		    j (int): Second index.

		Returns:
		    TruncSeries: xhat_{i,j} of order p.
		"""
		key = (min(i, j), max(i, j))
		if key not in self._xhat:
			if self._ladder is None:
				self._xhat[key] = TruncSeries.zero(0)
			else:
				self._xhat[key] = xhat_series(i, j, self._order, self._ladder)
		return self._xhat[key]

	def q(self, i: int, j: int) -> TruncSeries:
		"""
		The generating function q_{i,j} of the walks ending in (i, j).

		Args:
		    i (int): First index.
		    j (int): Second index.

		Returns:
		    TruncSeries: q_{i,j} of order p.
		"""
		if (i, j) == (0, 0):
			return self._c * (1 + self.xhat(0, 0))
		return self._c * self.xhat(i, j)

	def check_normalisation(self) -> bool:
		"""
		True if q_{0,0} (1 - 2z + z xhat_{0,0}) = 1 + xhat_{0,0} and
		c (1 - 2z + z xhat_{0,0}) = 1.
		"""
		x00 = self.xhat(0, 0)
		if self._order == 0:
			return self.q(0, 0) == TruncSeries.one(0)
		denominator = 1 - 2 * TruncSeries.z(self._order) + self._z_times(x00)
		return (
			self.q(0, 0) * denominator == 1 + x00
			and self._c * denominator == TruncSeries.one(self._order)
		)

	def __repr__(self) -> str:
		return f"CompensationSolution(order={self._order}, ladder={self._ladder!r})"


@helpers.check_int_args("i", "j", "p")
def q_series(i: int, j: int, p: int) -> TruncSeries:
	"""
	The generating function q_{i,j} up to z^p.

	Args:
	    i (int): First index.
	    j (int): Second index.
	    p (int): Target order.

	Returns:
	    TruncSeries: q_{i,j} of order p.
	"""
	return CompensationSolution(p).q(i, j)


def check_boundary_identities(p: int, xhat: callable = None) -> bool:
	"""
	Check the two boundary identities

	xhat_{1,0} / z - [xhat_{0,1} + xhat_{2,1} + xhat_{2,0} + xhat_{0,0}] = 1,
	(1/z - 1) xhat_{0,0} + 2 - [xhat_{1,0} + xhat_{0,1} + xhat_{1,1}] = 0,

	modulo z^(p+1). The divisions by z are exact divisions of series of order p+1.

	Args:
	    p (int): Order of the check, >= 1.
	    xhat (callable | None): Maps (i, j) to xhat_{i,j} of order >= p+1, defaults
	        to a fresh compensation solution.

	Returns:
	    bool: True if both identities hold.

	Raises:
	    ValuationViolation: If xhat_{1,0} or xhat_{0,0} does not vanish at z=0.
	"""
	if not isinstance(p, int) or p < 1:
		raise ValueError(f"Input 'p' must be an integer >= 1, got {p}.")
	if xhat is None:
		xhat = CompensationSolution(p + 1).xhat

	def divided(i: int, j: int) -> TruncSeries:
		try:
			return xhat(i, j).truncate(p + 1).exact_shift_div_z(1)
		except error.NonVanishingLowOrder as exc:
			raise error.ValuationViolation(f"xhat_{{{i},{j}}}") from exc

	def x(i: int, j: int) -> TruncSeries:
		return xhat(i, j).truncate(p)

	first = divided(1, 0) - (x(0, 1) + x(2, 1) + x(2, 0) + x(0, 0)) - 1
	second = divided(0, 0) - x(0, 0) + 2 - (x(1, 0) + x(0, 1) + x(1, 1))
	logger = logging.SingletonLogger()
	for name, residual in (("first", first), ("second", second)):
		if not residual.is_zero():
			logger.log_warning(
				f"The {name} boundary identity fails at z^{residual.valuation}"
			)
			return False
	return True


@helpers.must_be_int
def special_values(p: int) -> tuple[TruncSeries, TruncSeries, TruncSeries]:
	"""
	The generating functions q_{0,0}, Q(1,0;z) = c (1 - alpha_0) of the walks ending
	on the horizontal axis and Q(1,1;z) = c of all walks.

	Args:
	    p (int): Target order.

	Returns:
	    tuple[TruncSeries, TruncSeries, TruncSeries]: (q00, axis, total).
	"""
	solution = CompensationSolution(p)
	if solution.ladder is None:
		return solution.q(0, 0), solution.c, solution.c
	alpha0 = solution.ladder.alphas[0].truncate(p)
	return solution.q(0, 0), solution.c * (1 - alpha0), solution.c


def pole_term_coefficients(
	ladder: AlphaBetaLadder, k: int, n_max: int
) -> list[TruncSeries]:
	"""
	The coefficients of x^0..x^n_max of the partial fraction (1 - alpha_k) / (1 - alpha_k x),
	i.e. (1 - alpha_k) alpha_k^n. Each is alpha_k times the previous one, so the term
	has its pole at x = 1 / alpha_k.

	Args:
	    ladder (AlphaBetaLadder): The ladder.
	    k (int): Rung.
	    n_max (int): Largest power of x.

	Returns:
	    list[TruncSeries]: The coefficients.
	"""
	alpha = ladder.alphas[k]
	coefficients = [1 - alpha]
	for _ in range(n_max):
		coefficients.append(coefficients[-1] * alpha)
	return coefficients


@helpers.check_int_args("n", "p")
def boundary_gf_coefficient(n: int, p: int) -> TruncSeries:
	"""
	The coefficient of x^n of Q(x,0;z) taken from the partial fraction expansion

	Q(x,0;z) = c [1 + sum_k (1 - beta_k) ((1 - alpha_k) / (1 - alpha_k x)
	    - (1 - alpha_{k+1}) / (1 - alpha_{k+1} x) + (alpha_{k+1} - alpha_k) / (1 - beta_k x))],

	summed without telescoping. Each rung gains two powers of z, so ceil(p/2) + 1 rungs
	are used. The result equals q_{n,0}.

	Args:
	    n (int): Power of x.
	    p (int): Target order.

	Returns:
	    TruncSeries: q_{n,0} of order p.
	"""
	if p == 0:
		return TruncSeries([int(n == 0)], 0)
	depth = math.ceil(p / 2) + 1
	ladder = _build_for(p, depth)
	truncated = AlphaBetaLadder(
		[alpha.truncate(p) for alpha in ladder.alphas],
		[beta.truncate(p) for beta in ladder.betas],
	)
	poles = [pole_term_coefficients(truncated, k, n)[n] for k in range(depth + 1)]
	alphas, betas = truncated.alphas, truncated.betas
	xhat = TruncSeries.zero(p)
	for k in range(depth):
		horizontal = poles[k] - poles[k + 1]
		vertical = betas[k] ** n * (alphas[k + 1] - alphas[k])
		xhat = xhat + (1 - betas[k]) * (horizontal + vertical)
	c = CompensationSolution(p).c
	return c * (xhat + int(n == 0))
