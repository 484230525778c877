#!/usr/bin/env python3
"""
This module provides the defaults, argument checkers and formatting helpers shared by
the sub-packages of QuarterWalkComp.

Attributes:
* WalkDefaults: Class for storing the default parameters used in multiple scripts.
* WALK_NAMES: The names of the builtin walks.
* VERIFY_SUITES: The names of the verification suites.
* OUTPUT_FORMATS: The supported output formats.

Functions:
* must_be_int(func: callable) -> callable: Decorator to ensure the single argument is an integer.
* check_int_args(*names: str, minimum: int = 0) -> callable: Decorator checking named integer arguments.
* rational_to_str(value: Fraction) -> str: Serialize a rational as "numerator/denominator".
* rational_from_str(text: str) -> Fraction: Parse "numerator/denominator" (or an integer).
* coefficient_to_str(value: Fraction) -> str: Integers as plain decimals, other rationals as "p/q".
* round_float(value: float, digits: int) -> float | None: Round to significant digits for JSON.
* decimal_to_str(value: Decimal, digits: int) -> str: Scientific notation with significant digits.
* inclusive_range(start: int, stop: int, step: int) -> list[int]: Range including the stop value.
"""
import inspect
import math
from decimal import Decimal
from fractions import Fraction
from functools import wraps

WALK_NAMES = ("main", "rational_gf", "big_step")
VERIFY_SUITES = ("series", "ladder", "oracle", "identities", "variants", "numeric", "all")
OUTPUT_FORMATS = ("json", "csv")


class WalkDefaults:
	"""
	Class for storing the default parameters of the analysis, used in multiple scripts.
	"""

	ORDER: int = 40
	DEPTH_MARGIN: int = 1
	TOL: float = 1e-10
	P_START: int = 8
	P_STEP: int = 4
	P_MAX: int = 60
	H_PRIME_P: int = 60
	DERIVATIVE_WINDOW: tuple[float, float] = (0.25, 0.35)
	SQRT8_INV: float = 1 / math.sqrt(8)
	BRACKET_EPS: float = 1e-9
	FLOAT_SLACK: float = 1e-14
	TAIL_CUTOFF: float = 1e-14
	KMAX_GUARD: int = 2000
	ORDER_GUARD: int = 500
	FLOAT_DIGITS: int = 15
	TABLE_RANGE: tuple[int, int, int] = (10, 100, 10)
	CONSTANT_PAIRS: tuple[tuple[int, int], ...] = tuple(
		(i, j) for i in range(3) for j in range(3) if i + j >= 1
	)


def must_be_int(func: callable) -> callable:
	"""
	Decorator to ensure that the argument passed to the decorated function is an integer.

	Args:
	    func (callable): The function to be decorated.

	Returns:
	    callable: The decorated function.

	Raises:
	    TypeError: If the argument is not an integer.
	"""

	@wraps(func)
	def wrapper(number):
		if not isinstance(number, int) or isinstance(number, bool):
			raise TypeError("Input must be an integer.")
		return func(number)

	return wrapper


def check_int_args(*names: str, minimum: int = 0) -> callable:
	"""
	Decorator factory checking that the named arguments are integers >= minimum.

	Args:
	    *names (str): Names of the arguments to check.
	    minimum (int): Smallest allowed value.

	Returns:
	    callable: The decorator.
	"""

	def decorator(func: callable) -> callable:
		signature = inspect.signature(func)

		@wraps(func)
		def wrapper(*args, **kwargs):
			bound = signature.bind(*args, **kwargs)
			bound.apply_defaults()
			for name in names:
				value = bound.arguments[name]
				if not isinstance(value, int) or isinstance(value, bool):
					raise TypeError(f"Input '{name}' must be an integer.")
				if value < minimum:
					raise ValueError(
						f"Input '{name}' must be >= {minimum}, got {value}."
					)
			return func(*bound.args, **bound.kwargs)

		return wrapper

	return decorator


def rational_to_str(value: Fraction) -> str:
	"""
	Serialize a rational as "numerator/denominator".

	Args:
	    value (Fraction): The rational.

	Returns:
	    str: The decimal string, denominator always present.
	"""
	value = Fraction(value)
	return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
	"""
	Parse "numerator/denominator" or a plain integer.

	Args:
	    text (str): The decimal string.

	Returns:
	    Fraction: The rational in canonical form.
	"""
	return Fraction(text)


def coefficient_to_str(value: Fraction) -> str:
	"""
	Integers as plain decimal strings, other rationals as "p/q".

	Args:
	    value (Fraction): The coefficient.

	Returns:
	    str: The decimal string.
	"""
	value = Fraction(value)
	if value.denominator == 1:
		return str(value.numerator)
	return rational_to_str(value)


def round_float(value: float, digits: int = WalkDefaults.FLOAT_DIGITS) -> float | None:
	"""
	Round a float to a number of significant digits for serialization.

	Args:
	    value (float): The value.
	    digits (int): Significant digits.

	Returns:
	    float | None: The rounded value, None for nan and infinities.
	"""
	if value is None or not math.isfinite(value):
		return None
	return float(f"{value:.{digits}g}")


def decimal_to_str(value: Decimal, digits: int = WalkDefaults.FLOAT_DIGITS) -> str:
	"""
	Write a Decimal in scientific notation with a number of significant digits. Used
	for values beyond the float range.

	Args:
	    value (Decimal): The value.
	    digits (int): Significant digits.

	Returns:
	    str: The decimal string, e.g. "8.81400000000000e+44".
	"""
	return format(Decimal(value), f".{digits - 1}e")


def inclusive_range(start: int, stop: int, step: int) -> list[int]:
	"""
	Range from start to stop including stop when it is on the grid.

	Args:
	    start (int): First value.
	    stop (int): Last value.
	    step (int): Positive step.

	Returns:
	    list[int]: The values.
	"""
	if step <= 0:
		raise ValueError("Input 'step' must be positive.")
	return list(range(start, stop + 1, step))
