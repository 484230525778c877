#!/usr/bin/env python3
"""
Rational Walk Module

The walk "rational_gf" has a single product-form solution,
q_{i,j} = c_0 alpha_0^i beta_0^j, where beta_0 is the power series root of

beta / z = 1 + beta^2 + beta^2 (1 + beta)^2,

alpha_0 = beta_0 (1 + beta_0) and c_0 = beta_0 / z.

Classes:
* RationalSolution: beta_0, alpha_0 and c_0 at a fixed order.

Functions:
* solve_rational(order: int) -> RationalSolution: Fixed point iteration for beta_0.
* q_rational(i: int, j: int, order: int) -> TruncSeries: The generating function q_{i,j}.
"""
from ..series.trunc_series import TruncSeries
from ..utils import helpers, logging


class RationalSolution:
	"""
	The product-form solution of the rational walk.

	Attributes:
	    beta0 (TruncSeries): The root beta_0.
	    alpha0 (TruncSeries): beta_0 (1 + beta_0).
	    c0 (TruncSeries): beta_0 / z.
	    order (int): Common truncation order.
	"""

	def __init__(self, beta0: TruncSeries, alpha0: TruncSeries, c0: TruncSeries) -> None:
		self._beta0 = beta0
		self._alpha0 = alpha0
		self._c0 = c0

	@property
	def beta0(self) -> TruncSeries:
		return self._beta0

	@property
	def alpha0(self) -> TruncSeries:
		return self._alpha0

	@property
	def c0(self) -> TruncSeries:
		return self._c0

	@property
	def order(self) -> int:
		return self._c0.order

	def q(self, i: int, j: int) -> TruncSeries:
		"""q_{i,j} = c_0 alpha_0^i beta_0^j."""
		return self._c0 * self._alpha0**i * self._beta0**j

	def fixed_point_residual(self) -> TruncSeries:
		"""z (1 + beta^2 + beta^2 (1 + beta)^2) - beta, zero for the root."""
		beta = self._beta0
		square = beta * beta
		rhs = (1 + square + square * (1 + beta) ** 2).mul_z(1).truncate(self.order)
		return rhs - beta

	def c0_from_kernel(self) -> TruncSeries:
		"""The second form of c_0, 1 / (1 - z (alpha_0 + alpha_0 beta_0 + beta_0))."""
		alpha, beta = self._alpha0, self._beta0
		inner = (alpha + alpha * beta + beta).mul_z(1).truncate(self.order)
		return TruncSeries.one(self.order) / (1 - inner)

	def check_relations(self) -> bool:
		"""True if the defining relations hold and the two forms of c_0 agree."""
		return (
			self.fixed_point_residual().is_zero()
			and self._alpha0 == self._beta0 * (1 + self._beta0)
			and self._c0.mul_z(1).truncate(self.order) == self._beta0
			and self._c0 == self.c0_from_kernel()
		)

	def __repr__(self) -> str:
		return f"RationalSolution(order={self.order})"


@helpers.check_int_args("order", minimum=1)
def solve_rational(order: int) -> RationalSolution:
	"""
	Solve for beta_0 by iterating beta <- z (1 + beta^2 + beta^2 (1 + beta)^2) from 0;
	every iteration fixes one more coefficient.

	Args:
	    order (int): Truncation order, >= 1.

	Returns:
	    RationalSolution: The solution.
	"""
	logging.SingletonLogger().log_info(f"Solving the rational walk at order {order}")
	working = order + 1
	beta = TruncSeries.zero(working)
	for _ in range(working):
		square = beta * beta
		beta = (1 + square + square * (1 + beta) ** 2).mul_z(1).truncate(working)
	c0 = beta.exact_shift_div_z(1)
	beta = beta.truncate(order)
	return RationalSolution(beta, beta * (1 + beta), c0)


@helpers.check_int_args("i", "j", "order")
def q_rational(i: int, j: int, order: int) -> TruncSeries:
	"""
	The generating function q_{i,j} of the rational walk up to z^order.

	Args:
	    i (int): First index.
	    j (int): Second index.
	    order (int): Truncation order.

	Returns:
	    TruncSeries: q_{i,j}.
	"""
	if order == 0:
		return TruncSeries([int(i == j == 0)], 0)
	return solve_rational(order).q(i, j)
