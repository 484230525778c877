#!/usr/bin/env python3
"""
Ladder Module

This module builds the ladder of the compensation solution of the main walk: the
pairs (alpha_k, beta_k) on the kernel curve z(x^2 + y^2 + x^2 y^2) = x y, obtained
from alpha_0 = (1 - sqrt(1 - 8z^2)) / (4z) by alternately applying the branch
function f: beta_k = f(alpha_k), alpha_{k+1} = f(beta_k).

Every rung is an exact truncated series, alpha_k has valuation 2k+1 and beta_k has
valuation 2k+2, both with leading coefficient 1.

Classes:
* AlphaBetaLadder: The rungs alpha_0..alpha_K and beta_0..beta_K.

Functions:
* initial_pair(order: int) -> tuple[TruncSeries, TruncSeries]: alpha_0 and beta_0.
* f_apply(t: TruncSeries, order: int, branch: str = "minus") -> TruncSeries: The branch function f.
* build_ladder(K: int, order: int) -> AlphaBetaLadder: The first K+1 rungs.
* kernel_residual(x: TruncSeries, y: TruncSeries) -> TruncSeries: z(x^2 + y^2 + x^2 y^2) - x y.
* compensation_coefficients(ladder: AlphaBetaLadder) -> tuple[list, list]: c_k and d_k by recurrence.
"""
from ..errors import error
from ..series.trunc_series import TruncSeries
from ..utils import helpers, logging


class AlphaBetaLadder:
	"""
	The rungs of the compensation ladder as exact series.

	Attributes:
	    alphas (tuple[TruncSeries, ...]): alpha_0..alpha_K.
	    betas (tuple[TruncSeries, ...]): beta_0..beta_K.
	    K (int): Depth of the ladder.
	    order (int): Common truncation order.
	"""

	def __init__(self, alphas, betas) -> None:
		"""
		Initialize the ladder.

		Args:
		    alphas (Iterable[TruncSeries]): alpha_0..alpha_K.
		    betas (Iterable[TruncSeries]): beta_0..beta_K.
		"""
		self._alphas = tuple(alphas)
		self._betas = tuple(betas)
		if len(self._alphas) != len(self._betas) or not self._alphas:
			raise ValueError("A ladder needs as many alphas as betas, at least one.")

	@property
	def alphas(self) -> tuple[TruncSeries, ...]:
		return self._alphas

	@property
	def betas(self) -> tuple[TruncSeries, ...]:
		return self._betas

	@property
	def K(self) -> int:
		return len(self._alphas) - 1

	@property
	def order(self) -> int:
		return self._alphas[0].order

	def kernel_residuals(self) -> list[TruncSeries]:
		"""
		Residuals of the kernel equation for the pairs (alpha_k, beta_k) and
		(alpha_{k+1}, beta_k), in that order.

		Returns:
		    list[TruncSeries]: All zero truncations for a valid ladder.
		"""
		residuals = []
		for k in range(self.K + 1):
			residuals.append(kernel_residual(self._alphas[k], self._betas[k]))
			if k < self.K:
				residuals.append(kernel_residual(self._alphas[k + 1], self._betas[k]))
		return residuals

	def valuations_ok(self) -> bool:
		"""
		True if alpha_k and beta_k have valuations 2k+1 and 2k+2 with leading
		coefficient 1, for every rung visible at the ladder's order.
		"""
		for k in range(self.K + 1):
			pairs = ((self._alphas[k], 2 * k + 1), (self._betas[k], 2 * k + 2))
			for series, valuation in pairs:
				if valuation > series.order:
					continue
				if series.valuation != valuation or series[valuation] != 1:
					return False
		return True

	def __repr__(self) -> str:
		return f"AlphaBetaLadder(K={self.K}, order={self.order})"


def kernel_residual(x: TruncSeries, y: TruncSeries) -> TruncSeries:
	"""
	The kernel z(x^2 + y^2 + x^2 y^2) - x y, zero for points of the kernel curve.

	Args:
	    x (TruncSeries): First coordinate.
	    y (TruncSeries): Second coordinate.

	Returns:
	    TruncSeries: The residual at the smaller of the two orders.
	"""
	xx = x * x
	yy = y * y
	order = min(x.order, y.order)
	return (xx + yy + xx * yy).mul_z(1).truncate(order) - x * y


@helpers.check_int_args("order", minimum=1)
def initial_pair(order: int) -> tuple[TruncSeries, TruncSeries]:
	"""
	The first rung alpha_0 = (1 - sqrt(1 - 8z^2)) / (4z), beta_0 = alpha_0^2 / (1 + alpha_0^2).

	Args:
	    order (int): Truncation order, >= 1.

	Returns:
	    tuple[TruncSeries, TruncSeries]: (alpha_0, beta_0).
	"""
	z = TruncSeries.z(order + 1)
	root = (1 - 8 * z * z).sqrt_one_plus()
	alpha0 = (1 - root).exact_shift_div_z(1) / 4
	square = alpha0 * alpha0
	beta0 = square / (1 + square)
	return alpha0, beta0


def f_apply(t: TruncSeries, order: int, branch: str = "minus") -> TruncSeries:
	"""
	The branch function f(t) = t (1 - sqrt(1 - 4z^2 (1 + t^2))) / (2z (1 + t^2)),
	the root of z(1 + t^2) f^2 - t f + z t^2 = 0 that is a power series.

	Args:
	    t (TruncSeries): The argument, valuation >= 1, order >= order.
	    order (int): Truncation order of the result.
	    branch (str): "minus" for f, "plus" for the rejected root.

	Returns:
	    TruncSeries: f(t), of valuation valuation(t) + 1.

	Raises:
	    NonPositiveValuation: If t has a non-zero constant term.
	    BadValuation: For the "plus" branch.
	"""
	if branch not in ("minus", "plus"):
		raise ValueError(f"Unknown branch '{branch}'.")
	if t[0] != 0:
		raise error.NonPositiveValuation(t[0])
	if t.order < order:
		raise ValueError(f"The argument has order {t.order}, need {order}.")
	t = t.truncate(order)
	u = 1 + t * t
	root = (1 - (4 * u).mul_z(2)).sqrt_one_plus()
	numerator = 1 - root if branch == "minus" else 1 + root
	try:
		reduced = numerator.exact_shift_div_z(1) / 2
	except error.NonVanishingLowOrder as exc:
		reason = "the numerator does not vanish at z=0"
		raise error.BadValuation(branch, reason) from exc
	return (reduced / u * t).truncate(order)


@helpers.check_int_args("K", "order")
def build_ladder(K: int, order: int) -> AlphaBetaLadder:
	"""
	Build alpha_0..alpha_K and beta_0..beta_K by beta_k = f(alpha_k), alpha_{k+1} = f(beta_k).

	Args:
	    K (int): Depth, >= 0.
	    order (int): Truncation order, >= 2K + 2.

	Returns:
	    AlphaBetaLadder: The ladder.
	"""
	if order < 2 * K + 2:
		raise ValueError(
			f"A ladder of depth {K} needs order >= {2 * K + 2}, got {order}."
		)
	logger = logging.SingletonLogger()
	logger.log_info(f"Building the ladder to depth {K} at order {order}")
	alpha, _ = initial_pair(order)
	alphas, betas = [], []
	for k in range(K + 1):
		beta = f_apply(alpha, order)
		alphas.append(alpha)
		betas.append(beta)
		if k < K:
			alpha = f_apply(beta, order)
		logger.log_debug(f"Rung {k} done")
	return AlphaBetaLadder(alphas, betas)


def compensation_coefficients(
	ladder: AlphaBetaLadder,
) -> tuple[list[TruncSeries], list[TruncSeries]]:
	"""
	The compensation coefficients from c_0 = (1 - alpha_0)(1 - beta_0) and

	d_{k+1} = -(1 - alpha_{k+1}) / (1 - alpha_k) * c_k,
	c_{k+1} = -(1 - beta_{k+1}) / (1 - beta_k) * d_{k+1}.

	Args:
	    ladder (AlphaBetaLadder): The ladder.

	Returns:
	    tuple[list, list]: c_0..c_K and d_1..d_K (ds[k] holds d_{k+1}).
	"""
	alphas, betas = ladder.alphas, ladder.betas
	cs = [(1 - alphas[0]) * (1 - betas[0])]
	ds = []
	for k in range(ladder.K):
		d_next = -((1 - alphas[k + 1]) / (1 - alphas[k])) * cs[k]
		c_next = -((1 - betas[k + 1]) / (1 - betas[k])) * d_next
		ds.append(d_next)
		cs.append(c_next)
	return cs, ds
