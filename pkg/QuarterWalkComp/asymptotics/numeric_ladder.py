#!/usr/bin/env python3
"""
Numeric Ladder Module

This module evaluates the ladder of the main walk at a real point z in (0, 1/sqrt(8)].
The sequence gamma_0 = alpha_0(z), gamma_1 = beta_0(z), gamma_2 = alpha_1(z), ... is
obtained by iterating the branch function f, and optionally the derivatives
gamma'_k(z) by gamma'_{k+1} = gamma'_k d_t f(gamma_k) + d_z f(gamma_k).

The square roots are written without cancellation:
alpha_0 = 2z / (1 + sqrt(1 - 8z^2)) and f(t) = 2zt / (1 + sqrt(1 - 4z^2 (1 + t^2))).

Classes:
* NumericLadder: gamma_k(z) and optionally gamma'_k(z) as numpy arrays.

Functions:
* check_domain(z: float) -> float: Validate 0 < z <= 1/sqrt(8).
* alpha0_numeric(z: float) -> float: alpha_0(z).
* alpha0_prime(z: float) -> float: alpha_0'(z).
* f_numeric(t: float, z: float) -> float: The branch function.
* df_dt(t: float, z: float) -> float: Partial derivative of f in t.
* df_dz(t: float, z: float) -> float: Partial derivative of f in z.
* eval_ladder(z: float, K: int, with_derivatives: bool) -> NumericLadder: gamma_0..gamma_{2K+1}.
"""
import math
import numpy as np
from ..errors import error
from ..utils import helpers


def check_domain(z: float) -> float:
	"""
	Validate that z lies in (0, 1/sqrt(8)].

	Args:
	    z (float): The point.

	Returns:
	    float: z as a float.

	Raises:
	    DomainError: If z is outside of the interval.
	"""
	z = float(z)
	high = helpers.WalkDefaults.SQRT8_INV
	if not (0 < z <= high):
		raise error.DomainError(z, 0.0, high)
	return z


def check_derivative_domain(z: float) -> float:
	"""
	Validate that z lies in the window of the derivative bounds, [1/4, 0.35].

	Raises:
	    DerivativeDomainError: If z is outside of the window.
	"""
	low, high = helpers.WalkDefaults.DERIVATIVE_WINDOW
	z = float(z)
	if not (low <= z <= high):
		raise error.DerivativeDomainError(z, low, high)
	return z


def _root(value: float) -> float:
	return math.sqrt(max(value, 0.0))


def alpha0_numeric(z: float) -> float:
	return 2 * z / (1 + _root(1 - 8 * z * z))


def alpha0_prime(z: float) -> float:
	"""alpha_0'(z) = (1 + 2 alpha_0^2) / sqrt(1 - 8z^2), from alpha_0 = z (1 + 2 alpha_0^2)."""
	alpha = alpha0_numeric(z)
	return (1 + 2 * alpha * alpha) / math.sqrt(1 - 8 * z * z)


def f_numeric(t: float, z: float) -> float:
	return 2 * z * t / (1 + _root(1 - 4 * z * z * (1 + t * t)))


def df_dt(t: float, z: float) -> float:
	"""d_t f(t) = 2z / (1 + D) + 8 z^3 t^2 / (D (1 + D)^2), D = sqrt(1 - 4z^2 (1 + t^2))."""
	root = math.sqrt(1 - 4 * z * z * (1 + t * t))
	return 2 * z / (1 + root) + 8 * z**3 * t * t / (root * (1 + root) ** 2)


def df_dz(t: float, z: float) -> float:
	"""d_z f(t) = f(t) / (z D), D = sqrt(1 - 4z^2 (1 + t^2))."""
	root = math.sqrt(1 - 4 * z * z * (1 + t * t))
	return f_numeric(t, z) / (z * root)


class NumericLadder:
	"""
	The ladder evaluated at a real point.

	Attributes:
	    z (float): The point.
	    gammas (np.ndarray): gamma_0 = alpha_0(z), gamma_1 = beta_0(z), ...
	    gprimes (np.ndarray | None): gamma'_k(z), when requested.
	"""

	def __init__(self, z: float, gammas: np.ndarray, gprimes: np.ndarray = None) -> None:
		self._z = z
		self._gammas = gammas
		self._gprimes = gprimes

	@property
	def z(self) -> float:
		return self._z

	@property
	def gammas(self) -> np.ndarray:
		return self._gammas

	@property
	def gprimes(self) -> np.ndarray | None:
		return self._gprimes

	@property
	def alphas(self) -> np.ndarray:
		return self._gammas[0::2]

	@property
	def betas(self) -> np.ndarray:
		return self._gammas[1::2]

	def products(self) -> np.ndarray:
		"""T_k = gamma_k gamma_{k+1}."""
		return self._gammas[:-1] * self._gammas[1:]

	def product_derivatives(self) -> np.ndarray:
		"""T'_k = gamma'_k gamma_{k+1} + gamma_k gamma'_{k+1}."""
		if self._gprimes is None:
			raise ValueError("The ladder was evaluated without derivatives.")
		return (
			self._gprimes[:-1] * self._gammas[1:] + self._gammas[:-1] * self._gprimes[1:]
		)

	def is_decreasing(self) -> bool:
		"""True if 1/sqrt(2) >= gamma_0 > gamma_1 > ... > 0."""
		bounded = self._gammas[0] <= 1 / math.sqrt(2) + helpers.WalkDefaults.FLOAT_SLACK
		return bool(
			bounded and np.all(self._gammas > 0) and np.all(np.diff(self._gammas) < 0)
		)

	def within_bounds(self, slack: float = 1e-12) -> bool:
		"""True if gamma_m <= 2^(-(m+1)/2) for every m, up to the slack."""
		indices = np.arange(len(self._gammas))
		return bool(np.all(self._gammas <= 2.0 ** (-(indices + 1) / 2) + slack))

	def __repr__(self) -> str:
		return (
			f"NumericLadder(z={self._z!r}, terms={len(self._gammas)}, "
			f"derivatives={self._gprimes is not None})"
		)


def eval_ladder(z: float, K: int, with_derivatives: bool = False) -> NumericLadder:
	"""
	Evaluate alpha_0..alpha_K and beta_0..beta_K at z, i.e. gamma_0..gamma_{2K+1}.

	Args:
	    z (float): The point, 0 < z <= 1/sqrt(8).
	    K (int): Depth, >= 0.
	    with_derivatives (bool): Also compute gamma'_k, needs z in [1/4, 0.35].

	Returns:
	    NumericLadder: The evaluated ladder.

	Raises:
	    DomainError: If z is outside of (0, 1/sqrt(8)].
	    DerivativeDomainError: If derivatives are requested outside of [1/4, 0.35].
	"""
	z = check_domain(z)
	if not isinstance(K, int) or K < 0:
		raise ValueError(f"Input 'K' must be a non-negative integer, got {K}.")
	if with_derivatives:
		check_derivative_domain(z)
	size = 2 * K + 2
	gammas = np.empty(size)
	gammas[0] = alpha0_numeric(z)
	for m in range(1, size):
		gammas[m] = f_numeric(gammas[m - 1], z)
	gprimes = None
	if with_derivatives:
		gprimes = np.empty(size)
		gprimes[0] = alpha0_prime(z)
		for m in range(1, size):
			previous = gammas[m - 1]
			gprimes[m] = gprimes[m - 1] * df_dt(previous, z) + df_dz(previous, z)
	return NumericLadder(z, gammas, gprimes)
