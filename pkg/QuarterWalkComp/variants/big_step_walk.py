#!/usr/bin/env python3
"""
Big Step Walk Module

The walk "big_step" jumps from (i, 0) to (0, i) on the horizontal boundary. Its
solution is a one-sided compensation ladder,

q_{i,j} = sum_k c_k alpha_k^i beta_k^j,

with beta_0 = 0, alpha_k = g(beta_k), beta_{k+1} = alpha_k and
c_{k+1} = c_k alpha_{k+1} / (1 + beta_{k+1}). The branch function is

g(t) = (1 - tz - sqrt((1 - tz)^2 - 4z^2 (1 + t)^2)) / (2z (1 + t)),

and c_0 is fixed by

1 / c_0 = sum_k [beta_2 ... beta_{k+1} / ((1 + beta_1) ... (1 + beta_k))]
          [1 - z (beta_k + beta_{k+1} + beta_k beta_{k+1})].

The k-th term of every sum has valuation at least k.

Classes:
* BigStepLadder: alpha_k, beta_k and c_k as exact series.

Functions:
* g_apply(t: TruncSeries, order: int, branch: str = "minus") -> TruncSeries: The branch function g.
* build_bigstep(K: int, order: int) -> BigStepLadder: The ladder with max(K, order) rungs.
* q_bigstep(i: int, j: int, order: int, ladder: BigStepLadder | None) -> TruncSeries: q_{i,j}.
* cubic_residual(s: TruncSeries) -> TruncSeries: z s^3 + 2z s^2 + (z - 1) s + z.
"""
from ..errors import error
from ..series.trunc_series import TruncSeries
from ..utils import helpers, logging


class BigStepLadder:
	"""
	The one-sided ladder of the big step walk.

	Attributes:
	    alphas (tuple[TruncSeries, ...]): alpha_0..alpha_K.
	    betas (tuple[TruncSeries, ...]): beta_0 = 0, beta_1..beta_K.
	    cs (tuple[TruncSeries, ...]): c_0..c_K.
	    K (int): Depth.
	    order (int): Common truncation order.
	"""

	def __init__(self, alphas, betas, cs) -> None:
		self._alphas = tuple(alphas)
		self._betas = tuple(betas)
		self._cs = tuple(cs)
		if not len(self._alphas) == len(self._betas) == len(self._cs) > 0:
			raise ValueError("A ladder needs as many alphas, betas and cs, at least one.")

	@property
	def alphas(self) -> tuple[TruncSeries, ...]:
		return self._alphas

	@property
	def betas(self) -> tuple[TruncSeries, ...]:
		return self._betas

	@property
	def cs(self) -> tuple[TruncSeries, ...]:
		return self._cs

	@property
	def K(self) -> int:
		return len(self._alphas) - 1

	@property
	def order(self) -> int:
		return self._cs[0].order

	def valuations_ok(self) -> bool:
		"""
		True if c_k has valuation k, alpha_k valuation 1 and beta_k (k >= 1)
		valuation 1, as far as the order shows.
		"""
		for k in range(self.K + 1):
			if k <= self.order and self._cs[k].valuation != k:
				return False
			if self._alphas[k].valuation != 1:
				return False
			if k >= 1 and self._betas[k].valuation != 1:
				return False
		return True

	def recurrences_ok(self) -> bool:
		"""True if beta_{k+1} = alpha_k and c_{k+1} (1 + beta_{k+1}) = c_k alpha_{k+1}."""
		for k in range(self.K):
			if self._betas[k + 1] != self._alphas[k]:
				return False
			lhs = self._cs[k + 1] * (1 + self._betas[k + 1])
			if lhs != self._cs[k] * self._alphas[k + 1]:
				return False
		return True

	def __repr__(self) -> str:
		return f"BigStepLadder(K={self.K}, order={self.order})"


def g_apply(t: TruncSeries, order: int, branch: str = "minus") -> TruncSeries:
	"""
	The branch function g, the power series root of
	z (1 + t) g^2 - (1 - tz) g + z (1 + t) = 0.

	Args:
	    t (TruncSeries): The argument, zero or of valuation >= 1, order >= order.
	    order (int): Truncation order of the result.
	    branch (str): "minus" for g, "plus" for the rejected root.

	Returns:
	    TruncSeries: g(t), of valuation 1.

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
	one_plus = 1 + t
	linear = 1 - t.mul_z(1)
	disc = linear * linear - (4 * one_plus * one_plus).mul_z(2)
	root = disc.sqrt_one_plus()
	numerator = linear - root if branch == "minus" else linear + root
	try:
		reduced = numerator.exact_shift_div_z(1) / 2
	except error.NonVanishingLowOrder as exc:
		raise error.BadValuation(branch, "the numerator does not vanish at z=0") from exc
	return (reduced / one_plus).truncate(order)


def _inverse_c0(betas: tuple[TruncSeries, ...], order: int) -> TruncSeries:
	# term k uses beta_k and beta_{k+1}, so betas must reach index order + 1
	total = TruncSeries.zero(order)
	weight = TruncSeries.one(order)
	for k in range(order + 1):
		if k >= 1:
			weight = weight * betas[k + 1] / (1 + betas[k])
		pair = betas[k] + betas[k + 1] + betas[k] * betas[k + 1]
		total = total + weight * (1 - pair.mul_z(1).truncate(order))
	return total


@helpers.check_int_args("K", "order", minimum=1)
def build_bigstep(K: int, order: int) -> BigStepLadder:
	"""
	Build the big step ladder. It always carries max(K, order) rungs, so that the sum
	for 1 / c_0 reaches k = order.

	Args:
	    K (int): Requested depth, >= 1.
	    order (int): Truncation order, >= 1.

	Returns:
	    BigStepLadder: The ladder.
	"""
	depth = max(K, order)
	logger = logging.SingletonLogger()
	logger.log_info(f"Building the big step ladder to depth {depth} at order {order}")
	betas = [TruncSeries.zero(order)]
	alphas = []
	for k in range(depth + 1):
		alphas.append(g_apply(betas[k], order))
		betas.append(alphas[k])
	inverse = _inverse_c0(tuple(betas), order)
	cs = [TruncSeries.one(order) / inverse]
	for k in range(depth):
		cs.append(cs[k] * alphas[k + 1] / (1 + betas[k + 1]))
	logger.log_debug(f"c_0 = {cs[0]!r}")
	return BigStepLadder(alphas, betas[: depth + 1], cs)


@helpers.check_int_args("i", "j", "order")
def q_bigstep(
	i: int, j: int, order: int, ladder: BigStepLadder | None = None
) -> TruncSeries:
	"""
	The generating function q_{i,j} = sum_k c_k alpha_k^i beta_k^j up to z^order.

	Args:
	    i (int): First index.
	    j (int): Second index.
	    order (int): Truncation order.
	    ladder (BigStepLadder | None): Ladder to reuse, built when omitted.

	Returns:
	    TruncSeries: q_{i,j}.

	Raises:
	    InsufficientDepth: If the ladder has fewer than order rungs.
	"""
	if order == 0:
		return TruncSeries([int(i == j == 0)], 0)
	if ladder is None:
		ladder = build_bigstep(order, order)
	if ladder.K < order:
		raise error.InsufficientDepth(ladder.K, order)
	if ladder.order < order:
		raise ValueError(f"The ladder has order {ladder.order}, need {order}.")
	total = TruncSeries.zero(order)
	for k in range(order + 1):
		if j >= 1 and k == 0:
			continue
		alpha = ladder.alphas[k].truncate(order)
		beta = ladder.betas[k].truncate(order)
		total = total + ladder.cs[k].truncate(order) * alpha**i * beta**j
	return total


def cubic_residual(s: TruncSeries) -> TruncSeries:
	"""z s^3 + 2z s^2 + (z - 1) s + z, whose root with s(0) = 0 is the limit of alpha_k."""
	square = s * s
	z_part = (square * s + 2 * square + s + 1).mul_z(1).truncate(s.order)
	return z_part - s
