#!/usr/bin/env python3
"""
Custom Exceptions Module

This module defines custom exceptions to handle specific errors in the project.
Every exception subclasses the closest builtin so callers can catch either.

Classes:
* ZeroConstantTerm(ZeroDivisionError): Series division by a non-invertible series.
* NonVanishingLowOrder(ArithmeticError): Exact division by z^m is not exact.
* BadConstantTerm(ValueError): Square root of a series whose constant term is not 1.
* NonPositiveValuation(ValueError): Substitution of a series with a constant term.
* BadValuation(ValueError): A branch function produced a non power series.
* UnknownRule(ValueError): The requested builtin step rule does not exist.
* InvalidStepRule(ValueError): A step leaves the quarter plane from its region.
* OutOfRange(IndexError): A length outside of the computed count table.
* WrongRule(ValueError): A check was asked for a table of another walk.
* InsufficientDepth(ValueError): The ladder is too short for the requested order.
* ValuationViolation(ArithmeticError): An identity needs an exact division that fails.
* DomainError(ValueError): A real argument outside of the convergence domain.
* DerivativeDomainError(DomainError): Outside of the window of the derivative bounds.
* SignAmbiguity(ArithmeticError): The sign of h cannot be certified.
"""


class ZeroConstantTerm(ZeroDivisionError):
	"""
	Exception raised when dividing by a series with a zero constant term.

	Attributes:
	    order (int): The truncation order of the divisor.
	"""

	def __init__(self, order: int) -> None:
		"""
		Initialize the exception.

		Args:
		    order (int): The truncation order of the divisor.
		"""
		self.order = order
		super().__init__(
			f"The divisor (order {order}) has a zero constant term and is not invertible!"
		)


class NonVanishingLowOrder(ArithmeticError):
	"""
	Exception raised when an exact division by z^m finds a non-zero low coefficient.

	Attributes:
	    shift (int): The power m of z.
	    index (int): The first index below m with a non-zero coefficient.
	"""

	def __init__(self, shift: int, index: int) -> None:
		"""
		Initialize the exception.

		Args:
		    shift (int): The power m of z.
		    index (int): The first index below m with a non-zero coefficient.
		"""
		self.shift = shift
		self.index = index
		super().__init__(
			f"Cannot divide by z^{shift}: the coefficient of z^{index} is not zero!"
		)


class BadConstantTerm(ValueError):
	"""
	Exception raised when the square root is asked for a series not starting with 1.

	Attributes:
	    constant: The offending constant term.
	"""

	def __init__(self, constant) -> None:
		"""
		Initialize the exception.

		Args:
		    constant: The offending constant term.
		"""
		self.constant = constant
		super().__init__(f"The constant term must be 1, got '{constant}'!")


class NonPositiveValuation(ValueError):
	"""
	Exception raised when a series with a non-zero constant term is substituted.

	Attributes:
	    constant: The constant term of the inner series.
	"""

	def __init__(self, constant) -> None:
		"""
		Initialize the exception.

		Args:
		    constant: The constant term of the inner series.
		"""
		self.constant = constant
		super().__init__(
			f"The inner series must have valuation >= 1, constant term is '{constant}'!"
		)


class BadValuation(ValueError):
	"""
	Exception raised when a branch of an algebraic function is not a power series.

	Attributes:
	    branch (str): The branch that was requested.
	"""

	def __init__(self, branch: str, reason: str = "") -> None:
		"""
		Initialize the exception.

		Args:
		    branch (str): The branch that was requested.
		    reason (str): Extra information.
		"""
		self.branch = branch
		message = f"The '{branch}' branch does not give a formal power series"
		super().__init__(f"{message}: {reason}!" if reason else f"{message}!")


class UnknownRule(ValueError):
	"""
	Exception raised when a builtin step rule is not known.

	Attributes:
	    name (str): The requested name.
	"""

	def __init__(self, name: str) -> None:
		"""
		Initialize the exception.

		Args:
		    name (str): The requested name.
		"""
		self.name = name
		super().__init__(f"The step rule '{name}' is not supported!")


class InvalidStepRule(ValueError):
	"""
	Exception raised when a step leaves the quarter plane from its region.

	Attributes:
	    region (str): The region of the step set.
	    step (tuple[int, int]): The offending step.
	"""

	def __init__(self, region: str, step: tuple[int, int]) -> None:
		"""
		Initialize the exception.

		Args:
		    region (str): The region of the step set.
		    step (tuple[int, int]): The offending step.
		"""
		self.region = region
		self.step = step
		super().__init__(f"The step {step} is not valid in the '{region}' region!")


class OutOfRange(IndexError):
	"""
	Exception raised when a length outside of the count table is requested.

	Attributes:
	    k (int): The requested length.
	    kmax (int): The maximum length of the table.
	"""

	def __init__(self, k: int, kmax: int) -> None:
		"""
		Initialize the exception.

		Args:
		    k (int): The requested length.
		    kmax (int): The maximum length of the table.
		"""
		self.k = k
		self.kmax = kmax
		super().__init__(f"Length {k} is outside of the table range 0..{kmax}!")


class WrongRule(ValueError):
	"""
	Exception raised when a check is run on a table of another walk.

	Attributes:
	    expected (str): The rule the check needs.
	    actual (str): The rule of the table.
	"""

	def __init__(self, expected: str, actual: str) -> None:
		"""
		Initialize the exception.

		Args:
		    expected (str): The rule the check needs.
		    actual (str): The rule of the table.
		"""
		self.expected = expected
		self.actual = actual
		super().__init__(f"Expected a table of the '{expected}' walk, got '{actual}'!")


class InsufficientDepth(ValueError):
	"""
	Exception raised when a ladder is too short for the requested coefficients.

	Attributes:
	    depth (int): The depth of the ladder.
	    needed (int): The depth needed.
	"""

	def __init__(self, depth: int, needed: int) -> None:
		"""
		Initialize the exception.

		Args:
		    depth (int): The depth of the ladder.
		    needed (int): The depth needed.
		"""
		self.depth = depth
		self.needed = needed
		super().__init__(f"Ladder depth {depth} is too small, need at least {needed}!")


class ValuationViolation(ArithmeticError):
	"""
	Exception raised when a series that must vanish at z=0 does not.

	Attributes:
	    name (str): The name of the series.
	"""

	def __init__(self, name: str) -> None:
		"""
		Initialize the exception.

		Args:
		    name (str): The name of the series.
		"""
		self.name = name
		super().__init__(f"The series '{name}' does not vanish at z=0!")


class DomainError(ValueError):
	"""
	Exception raised when z lies outside of the domain of convergence.

	Attributes:
	    z (float): The offending argument.
	    low (float): Lower end of the allowed interval.
	    high (float): Upper end of the allowed interval.
	"""

	def __init__(self, z: float, low: float, high: float) -> None:
		"""
		Initialize the exception.

		Args:
		    z (float): The offending argument.
		    low (float): Lower end of the allowed interval.
		    high (float): Upper end of the allowed interval.
		"""
		self.z = z
		self.low = low
		self.high = high
		super().__init__(f"z={z!r} is outside of the interval ({low}, {high}]!")


class DerivativeDomainError(DomainError):
	"""
	Exception raised when a derivative is requested outside of [low, high].
	"""

	def __init__(self, z: float, low: float, high: float) -> None:
		"""
		Initialize the exception.

		Args:
		    z (float): The offending argument.
		    low (float): Lower end of the derivative window.
		    high (float): Upper end of the derivative window.
		"""
		super().__init__(z, low, high)
		self.args = (f"z={z!r} is outside of the derivative window [{low}, {high}]!",)


class SignAmbiguity(ArithmeticError):
	"""
	Exception raised when the sign of h(z) cannot be certified.

	Attributes:
	    z (float): The point of evaluation.
	    p_max (int): The largest tail depth that was tried.
	"""

	def __init__(self, z: float, p_max: int) -> None:
		"""
		Initialize the exception.

		Args:
		    z (float): The point of evaluation.
		    p_max (int): The largest tail depth that was tried.
		"""
		self.z = z
		self.p_max = p_max
		super().__init__(f"The sign of h({z!r}) is not certified up to p={p_max}!")
