#!/usr/bin/env python3
"""
Singularity Module

This module locates the dominant singularity rho of the generating functions of the
main walk: the unique zero in (1/3, 1/sqrt(8)) of

h(z) = 1 - 2z + z xhat_{0,0}(z) = 1 + 2z (-1 - alpha_0 + sum_k (-1)^k T_k),

with T_k = gamma_k gamma_{k+1}. The alternating sum has monotone tails, so the partial
sum through T_p is within 2z / sqrt(2)^(2p+3) of h(z). A sign is certified once the
partial sum is further from zero than that bound, and rho is bracketed by bisection on
certified signs.

Classes:
* RhoBracket: A certified bracket [lo, hi] around rho.

Functions:
* h_eval(z: float, p: int) -> tuple[float, float]: Partial sum and tail bound of h(z).
* h_partial_bracket(z: float, p: int) -> tuple[float, float]: Consecutive partial sums around h(z).
* certified_sign(z: float, p_start: int, p_max: int) -> tuple[int, int]: Sign of h(z) and depth used.
* find_rho(width_tol: float, p_max: int) -> RhoBracket: Bisection on certified signs.
* sign_change_count(n_points: int) -> int: Sign changes of h on a grid over (1/3, 1/sqrt(8)).
* h_prime(z: float, p: int) -> tuple[float, float]: h'(z) and its error bound.
"""
import math
import numpy as np
from ..errors import error
from ..utils import helpers, logging
from .numeric_ladder import alpha0_prime, check_derivative_domain, check_domain, eval_ladder

SQRT2 = math.sqrt(2)


class RhoBracket:
	"""
	A bracket [lo, hi] with h(lo) > 0 and h(hi) < 0 both certified.

	Attributes:
	    lo (float): Lower end.
	    hi (float): Upper end.
	    tail_depth (int): Largest depth p used to certify a sign.
	"""

	def __init__(self, lo: float, hi: float, tail_depth: int) -> None:
		if not lo < hi:
			raise ValueError(f"Empty bracket [{lo}, {hi}].")
		self._lo = lo
		self._hi = hi
		self._tail_depth = tail_depth

	@property
	def lo(self) -> float:
		return self._lo

	@property
	def hi(self) -> float:
		return self._hi

	@property
	def tail_depth(self) -> int:
		return self._tail_depth

	@property
	def mid(self) -> float:
		return (self._lo + self._hi) / 2

	@property
	def width(self) -> float:
		return self._hi - self._lo

	def __repr__(self) -> str:
		return f"RhoBracket(lo={self._lo!r}, hi={self._hi!r}, tail_depth={self._tail_depth})"


def _ladder_for(z: float, p: int, with_derivatives: bool = False):
	# gamma_0..gamma_{p+1} are needed for T_0..T_p
	return eval_ladder(z, p // 2 + 1, with_derivatives)


def _alternating(values: np.ndarray) -> float:
	signs = np.where(np.arange(len(values)) % 2 == 0, 1.0, -1.0)
	return float(np.sum(signs * values))


def h_eval(z: float, p: int) -> tuple[float, float]:
	"""
	The partial sum of h(z) through T_p and the bound on the neglected tail.

	Args:
	    z (float): The point, 0 < z <= 1/sqrt(8).
	    p (int): Last term of the alternating sum, >= 0.

	Returns:
	    tuple[float, float]: (value, error_bound), error_bound = 2z / sqrt(2)^(2p+3).

	Raises:
	    DomainError: If z is outside of (0, 1/sqrt(8)].
	"""
	z = check_domain(z)
	if not isinstance(p, int) or p < 0:
		raise ValueError(f"Input 'p' must be a non-negative integer, got {p}.")
	ladder = _ladder_for(z, p)
	partial = _alternating(ladder.products()[: p + 1])
	value = 1 + 2 * z * (-1 - ladder.gammas[0] + partial)
	return value, 2 * z / SQRT2 ** (2 * p + 3)


def h_partial_bracket(z: float, p: int) -> tuple[float, float]:
	"""
	The partial sums through T_{2p+1} and T_{2p}, which enclose h(z):

	1 + 2z(-1 - alpha_0 + L_{2p+1}) < h(z) < 1 + 2z(-1 - alpha_0 + L_{2p}).

	Args:
	    z (float): The point.
	    p (int): Half of the depth.

	Returns:
	    tuple[float, float]: (lower, upper).
	"""
	lower, _ = h_eval(z, 2 * p + 1)
	upper, _ = h_eval(z, 2 * p)
	return lower, upper


def certified_sign(
	z: float,
	p_start: int = helpers.WalkDefaults.P_START,
	p_max: int = helpers.WalkDefaults.P_MAX,
) -> tuple[int, int]:
	"""
	The sign of h(z), certified by the tail bound plus a rounding slack. The depth grows
	from p_start in steps of P_STEP until the sign is certain.

	Args:
	    z (float): The point.
	    p_start (int): First depth.
	    p_max (int): Largest depth.

	Returns:
	    tuple[int, int]: (sign, depth used).

	Raises:
	    SignAmbiguity: If no depth up to p_max certifies the sign.
	"""
	slack = helpers.WalkDefaults.FLOAT_SLACK
	p = p_start
	while p <= p_max:
		value, bound = h_eval(z, p)
		if value - bound > slack:
			return 1, p
		if value + bound < -slack:
			return -1, p
		p += helpers.WalkDefaults.P_STEP
	raise error.SignAmbiguity(z, p_max)


def find_rho(
	width_tol: float = helpers.WalkDefaults.TOL, p_max: int = helpers.WalkDefaults.P_MAX
) -> RhoBracket:
	"""
	Bracket rho by bisection on certified signs over [1/3 + eps, 1/sqrt(8) - eps].

	When the sign at a midpoint cannot be certified, rho lies within the rounding
	slack of it, and the points a quarter of the tolerance on either side form the
	final bracket if their signs are certified.

	Args:
	    width_tol (float): Largest width of the returned bracket, > 0.
	    p_max (int): Largest tail depth.

	Returns:
	    RhoBracket: The bracket.

	Raises:
	    SignAmbiguity: If a sign cannot be certified.
	"""
	if not width_tol > 0:
		raise ValueError(f"Input 'width_tol' must be positive, got {width_tol}.")
	logger = logging.SingletonLogger()
	eps = helpers.WalkDefaults.BRACKET_EPS
	lo, hi = 1 / 3 + eps, helpers.WalkDefaults.SQRT8_INV - eps
	sign_lo, depth_lo = certified_sign(lo, p_max=p_max)
	sign_hi, depth_hi = certified_sign(hi, p_max=p_max)
	if (sign_lo, sign_hi) != (1, -1):
		raise ArithmeticError("h does not change sign on the starting bracket.")
	depth = max(depth_lo, depth_hi)
	steps = 0
	while hi - lo > width_tol:
		mid = (lo + hi) / 2
		try:
			sign, used = certified_sign(mid, p_max=p_max)
		except error.SignAmbiguity:
			logger.log_warning(f"Sign of h not certified at {mid!r}, closing the bracket")
			left, right = mid - width_tol / 4, mid + width_tol / 4
			sign_left, used_left = certified_sign(left, p_max=p_max)
			sign_right, used_right = certified_sign(right, p_max=p_max)
			if (sign_left, sign_right) != (1, -1):
				raise
			return RhoBracket(left, right, max(depth, used_left, used_right))
		depth = max(depth, used)
		if sign > 0:
			lo = mid
		else:
			hi = mid
		steps += 1
	logger.log_info(f"Bracketed rho in [{lo!r}, {hi!r}] after {steps} bisection steps")
	return RhoBracket(lo, hi, depth)


def sign_change_count(n_points: int = 1000) -> int:
	"""
	Count the sign changes of h on a grid of interior points of (1/3, 1/sqrt(8)).
	Points whose sign cannot be certified are skipped.

	Args:
	    n_points (int): Number of grid points.

	Returns:
	    int: The number of sign changes.
	"""
	grid = np.linspace(1 / 3, helpers.WalkDefaults.SQRT8_INV, n_points + 2)[1:-1]
	signs = []
	for z in grid:
		try:
			signs.append(certified_sign(float(z))[0])
		except error.SignAmbiguity:
			continue
	return int(np.count_nonzero(np.diff(signs) != 0))


def h_prime(z: float, p: int = helpers.WalkDefaults.H_PRIME_P) -> tuple[float, float]:
	"""
	The derivative h'(z) = 2(-1 - alpha_0 + L) + 2z(-alpha_0' + L'), where L and L' are
	the alternating sums of T_k and T'_k = gamma'_k gamma_{k+1} + gamma_k gamma'_{k+1}
	through k = p. The error bound sums the tail bound 200 / sqrt(2)^(k+2) of |T'_k|
	beyond p, scaled by 2z, and the tail of L.

	Args:
	    z (float): The point, in [1/4, 0.35].
	    p (int): Last term of the sums.

	Returns:
	    tuple[float, float]: (value, error_bound).

	Raises:
	    DerivativeDomainError: If z is outside of [1/4, 0.35].
	"""
	z = check_derivative_domain(z)
	check_domain(z)
	ladder = _ladder_for(z, p, with_derivatives=True)
	partial = _alternating(ladder.products()[: p + 1])
	partial_prime = _alternating(ladder.product_derivatives()[: p + 1])
	value = 2 * (-1 - ladder.gammas[0] + partial) + 2 * z * (
		-alpha0_prime(z) + partial_prime
	)
	tail_prime = 200 / SQRT2 ** (p + 3) / (1 - 1 / SQRT2)
	tail = 1 / SQRT2 ** (2 * p + 3)
	return value, 2 * z * tail_prime + 2 * tail
