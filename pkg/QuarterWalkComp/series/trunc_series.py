#!/usr/bin/env python3
"""
Truncated Series Module

This module defines the TruncSeries class, a formal power series in z with exact
rational coefficients known modulo z^(order+1). It is the substrate of every exact
computation in QuarterWalkComp: the ladders of the compensation solution, the
variant walks and the identity checks.

Classes:
* TruncSeries: Truncated formal power series with Fraction coefficients.

Functions:
* compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries: Substitute inner into outer.
* div(a: TruncSeries, b: TruncSeries) -> TruncSeries: Series division.
* exact_shift_div_z(a: TruncSeries, m: int) -> TruncSeries: Exact division by z^m.
* sqrt_one_plus(s: TruncSeries) -> TruncSeries: Square root of a series starting with 1.
* derivative(s: TruncSeries) -> TruncSeries: Formal derivative in z.
"""
import math
from fractions import Fraction
from numbers import Rational
from ..errors import error
from ..utils import helpers

SCALAR_TYPES = (int, Fraction)


def _to_fraction(value) -> Fraction:
	if isinstance(value, bool):
		raise TypeError("Coefficients must be integers or rationals, not booleans.")
	if isinstance(value, (Rational, str)):
		return Fraction(value)
	raise TypeError(
		f"Coefficients must be integers or rationals, got '{type(value).__name__}'."
	)


class TruncSeries:
	"""
	A formal power series c_0 + c_1 z + ... + c_order z^order + O(z^(order+1)).

	Coefficients are Fractions in canonical form. Instances are immutable; every
	operation returns a new series whose order is the order at which the result
	is known exactly.

	Attributes:
	    coeffs (tuple[Fraction, ...]): Coefficient of z^n at index n, length order+1.
	    order (int): The series is known modulo z^(order+1).
	    valuation (int | float): Index of the first non-zero coefficient, inf if none.
	"""

	__slots__ = ("_coeffs", "_order")

	def __init__(self, coeffs=(), order: int | None = None) -> None:
		"""
		Initialize the series.

		Args:
		    coeffs (Iterable): Coefficients (int, Fraction or "p/q" strings).
		    order (int | None): Truncation order, defaults to len(coeffs) - 1.
		        Missing coefficients are zero, extra ones are dropped.

		Raises:
		    TypeError: If the order or a coefficient has the wrong type.
		    ValueError: If the order is negative or cannot be inferred.
		"""
		values = [_to_fraction(c) for c in coeffs]
		if order is None:
			if not values:
				raise ValueError("Cannot infer the order of an empty series.")
			order = len(values) - 1
		if not isinstance(order, int) or isinstance(order, bool):
			raise TypeError("Input 'order' must be an integer.")
		if order < 0:
			raise ValueError(f"Input 'order' must be >= 0, got {order}.")
		values = values[: order + 1]
		values.extend([Fraction(0)] * (order + 1 - len(values)))
		self._coeffs = tuple(values)
		self._order = order

	@classmethod
	def zero(cls, order: int) -> "TruncSeries":
		"""The zero truncation of the given order."""
		return cls((), order)

	@classmethod
	def constant(cls, value, order: int) -> "TruncSeries":
		"""A constant series."""
		return cls((value,), order)

	@classmethod
	def one(cls, order: int) -> "TruncSeries":
		"""The series 1."""
		return cls((1,), order)

	@classmethod
	def monomial(cls, power: int, order: int, coefficient=1) -> "TruncSeries":
		"""The series coefficient * z^power (zero when power > order)."""
		coeffs = [0] * (order + 1)
		if power <= order:
			coeffs[power] = coefficient
		return cls(coeffs, order)

	@classmethod
	def z(cls, order: int) -> "TruncSeries":
		"""The series z."""
		return cls.monomial(1, order)

	@classmethod
	def from_json(cls, data: dict) -> "TruncSeries":
		"""
		Rebuild a series from its JSON form.

		Args:
		    data (dict): {"order": n, "coeffs": ["p/q", ...]}.

		Returns:
		    TruncSeries: The series.
		"""
		return cls([helpers.rational_from_str(c) for c in data["coeffs"]], data["order"])

	@property
	def coeffs(self) -> tuple[Fraction, ...]:
		return self._coeffs

	@property
	def order(self) -> int:
		return self._order

	@property
	def valuation(self) -> int | float:
		for index, value in enumerate(self._coeffs):
			if value != 0:
				return index
		return math.inf

	def is_zero(self) -> bool:
		"""True for the zero truncation."""
		return self.valuation == math.inf

	def __getitem__(self, index: int) -> Fraction:
		return self._coeffs[index]

	def __len__(self) -> int:
		return self._order + 1

	def __iter__(self):
		return iter(self._coeffs)

	def __eq__(self, other) -> bool:
		if not isinstance(other, TruncSeries):
			return NotImplemented
		return self._order == other._order and self._coeffs == other._coeffs

	def __hash__(self) -> int:
		return hash((self._order, self._coeffs))

	def __repr__(self) -> str:
		coeffs = ", ".join(helpers.coefficient_to_str(c) for c in self._coeffs)
		return f"TruncSeries([{coeffs}], order={self._order})"

	def _coerce(self, other) -> "TruncSeries":
		if isinstance(other, TruncSeries):
			return other
		if isinstance(other, SCALAR_TYPES) and not isinstance(other, bool):
			return TruncSeries.constant(other, self._order)
		raise TypeError(
			f"Cannot combine a series with '{type(other).__name__}'."
		)

	def truncate(self, order: int) -> "TruncSeries":
		"""
		Forget the coefficients above z^order.

		Args:
		    order (int): New order, at most the current one.

		Returns:
		    TruncSeries: The truncated series.
		"""
		if order > self._order:
			raise ValueError(
				f"Cannot raise the order from {self._order} to {order} by truncation."
			)
		return TruncSeries(self._coeffs, order)

	def add(self, other) -> "TruncSeries":
		other = self._coerce(other)
		order = min(self._order, other._order)
		return TruncSeries(
			[self._coeffs[n] + other._coeffs[n] for n in range(order + 1)], order
		)

	def sub(self, other) -> "TruncSeries":
		other = self._coerce(other)
		order = min(self._order, other._order)
		return TruncSeries(
			[self._coeffs[n] - other._coeffs[n] for n in range(order + 1)], order
		)

	def scale(self, factor) -> "TruncSeries":
		"""Multiply every coefficient by a scalar."""
		factor = _to_fraction(factor)
		return TruncSeries([factor * c for c in self._coeffs], self._order)

	def mul(self, other) -> "TruncSeries":
		"""
		Truncated Cauchy product.

		Args:
		    other (TruncSeries | int | Fraction): The other factor.

		Returns:
		    TruncSeries: The product at the smaller of the two orders.
		"""
		if not isinstance(other, TruncSeries):
			return self.scale(self._coerce(other)[0])
		order = min(self._order, other._order)
		result = [Fraction(0)] * (order + 1)
		right = other._coeffs
		for i in range(order + 1):
			left = self._coeffs[i]
			if left == 0:
				continue
			for j in range(order + 1 - i):
				if right[j] != 0:
					result[i + j] += left * right[j]
		return TruncSeries(result, order)

	def div(self, other) -> "TruncSeries":
		"""
		Series division self / other.

		Args:
		    other (TruncSeries | int | Fraction): The divisor.

		Returns:
		    TruncSeries: q with q * other = self modulo z^(order+1).

		Raises:
		    ZeroConstantTerm: If the divisor has a zero constant term.
		"""
		other = self._coerce(other)
		order = min(self._order, other._order)
		if other._coeffs[0] == 0:
			raise error.ZeroConstantTerm(other._order)
		inverse_lead = 1 / other._coeffs[0]
		right = other._coeffs
		quotient = []
		for n in range(order + 1):
			acc = self._coeffs[n]
			for k in range(1, n + 1):
				if right[k] != 0:
					acc -= right[k] * quotient[n - k]
			quotient.append(acc * inverse_lead)
		return TruncSeries(quotient, order)

	def mul_z(self, m: int = 1) -> "TruncSeries":
		"""
		Multiply by z^m. The order grows by m since the low coefficients are exact zeros.

		Args:
		    m (int): Non-negative power.

		Returns:
		    TruncSeries: The shifted series.
		"""
		if m < 0:
			raise ValueError(f"Input 'm' must be >= 0, got {m}.")
		return TruncSeries((0,) * m + self._coeffs, self._order + m)

	def exact_shift_div_z(self, m: int = 1) -> "TruncSeries":
		"""
		Divide by z^m when the coefficients of z^0..z^(m-1) vanish.

		Args:
		    m (int): Positive power, at most the order.

		Returns:
		    TruncSeries: The quotient, of order self.order - m.

		Raises:
		    NonVanishingLowOrder: If one of the low coefficients is not zero.
		"""
		if m < 1:
			raise ValueError(f"Input 'm' must be >= 1, got {m}.")
		if m > self._order:
			raise ValueError(
				f"Cannot divide a series of order {self._order} by z^{m}."
			)
		for index in range(m):
			if self._coeffs[index] != 0:
				raise error.NonVanishingLowOrder(m, index)
		return TruncSeries(self._coeffs[m:], self._order - m)

	def sqrt_one_plus(self) -> "TruncSeries":
		"""
		Square root with constant term 1, by the coefficient recurrence
		2 r_n = s_n - sum_{k=1}^{n-1} r_k r_{n-k}.

		Returns:
		    TruncSeries: r with r^2 = self modulo z^(order+1).

		Raises:
		    BadConstantTerm: If the constant term is not 1.
		"""
		if self._coeffs[0] != 1:
			raise error.BadConstantTerm(self._coeffs[0])
		root = [Fraction(1)]
		for n in range(1, self._order + 1):
			acc = self._coeffs[n]
			for k in range(1, n):
				acc -= root[k] * root[n - k]
			root.append(acc / 2)
		return TruncSeries(root, self._order)

	def derivative(self) -> "TruncSeries":
		"""
		Formal derivative, one order lower.

		Raises:
		    ValueError: If the order is 0.
		"""
		if self._order < 1:
			raise ValueError("The derivative needs a series of order >= 1.")
		return TruncSeries(
			[(n + 1) * self._coeffs[n + 1] for n in range(self._order)],
			self._order - 1,
		)

	def evaluate(self, x: float) -> float:
		"""
		Evaluate the truncated polynomial at a float by Horner's rule.

		Args:
		    x (float): The point.

		Returns:
		    float: The value of the polynomial part.
		"""
		acc = 0.0
		for value in reversed(self._coeffs):
			acc = acc * x + float(value)
		return acc

	def to_json(self) -> dict:
		"""Serialize as {"order": n, "coeffs": ["p/q", ...]}."""
		return {
			"order": self._order,
			"coeffs": [helpers.rational_to_str(c) for c in self._coeffs],
		}

	def __add__(self, other):
		return self.add(other)

	def __radd__(self, other):
		return self.add(other)

	def __sub__(self, other):
		return self.sub(other)

	def __rsub__(self, other):
		return self._coerce(other).sub(self)

	def __mul__(self, other):
		return self.mul(other)

	def __rmul__(self, other):
		return self.mul(other)

	def __truediv__(self, other):
		return self.div(other)

	def __rtruediv__(self, other):
		return self._coerce(other).div(self)

	def __neg__(self):
		return self.scale(-1)

	def __pow__(self, exponent: int):
		if not isinstance(exponent, int) or exponent < 0:
			raise ValueError("Only non-negative integer powers are supported.")
		result = TruncSeries.one(self._order)
		base = self
		while exponent:
			if exponent & 1:
				result = result * base
			base = base * base
			exponent >>= 1
		return result


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
	"""
	Substitute inner for z in outer, i.e. outer(inner(z)).

	Args:
	    outer (TruncSeries): The outer series.
	    inner (TruncSeries): The inner series, valuation >= 1.

	Returns:
	    TruncSeries: The composition at the smaller of the two orders.

	Raises:
	    NonPositiveValuation: If inner has a non-zero constant term.
	"""
	if inner[0] != 0:
		raise error.NonPositiveValuation(inner[0])
	order = min(outer.order, inner.order)
	inner = inner.truncate(order)
	acc = TruncSeries.constant(outer[order], order)
	for n in range(order - 1, -1, -1):
		acc = acc * inner + outer[n]
	return acc


def div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
	"""Series division a / b, see TruncSeries.div."""
	return a.div(b)


def exact_shift_div_z(a: TruncSeries, m: int = 1) -> TruncSeries:
	"""Exact division by z^m, see TruncSeries.exact_shift_div_z."""
	return a.exact_shift_div_z(m)


def sqrt_one_plus(s: TruncSeries) -> TruncSeries:
	"""Square root with constant term 1, see TruncSeries.sqrt_one_plus."""
	return s.sqrt_one_plus()


def derivative(s: TruncSeries) -> TruncSeries:
	"""Formal derivative, see TruncSeries.derivative."""
	return s.derivative()
