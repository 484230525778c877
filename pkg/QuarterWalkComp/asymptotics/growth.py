#!/usr/bin/env python3
"""
Growth Module

This module turns the certified bracket around rho into the growth constants of the
main walk,

q_{0,0,k} ~ C_{0,0} rho^(-k),   C_{0,0} = (3 rho - 1) / (-rho^2 h'(rho)),
q_{i,j,k} ~ C_{i,j} rho^(-k),   C_{i,j} = xhat_{i,j}(rho) / (-rho h'(rho)),

together with the constants of the total number of walks, 1 / (-rho h'(rho)), and of
the walks ending on the horizontal axis, (1 - alpha_0(rho)) / (-rho h'(rho)). The
growth table compares C_{0,0} rho^(-k) with the exact counts of the DP oracle.

Classes:
* AsymptoticReport: rho bracket, h'(rho), growth constants and the optional table.

Functions:
* xhat_numeric(i: int, j: int, z: float) -> tuple[float, float]: xhat_{i,j}(z) and its error bound.
* growth_constants(rho: RhoBracket, pairs) -> AsymptoticReport: The growth constants.
* growth_table(kmin: int, kmax: int, step: int, report: AsymptoticReport | None) -> pd.DataFrame: Exact vs asymptotic counts.
* asymptotic_report(tol: float, kmin: int, kmax: int, step: int) -> AsymptoticReport: Bracket, constants and table.
"""
import math
from decimal import Decimal, localcontext
import numpy as np
import pandas as pd
from ..utils import helpers, logging
from ..walks.walk_dp import origin_counts
from .numeric_ladder import alpha0_numeric, check_domain, eval_ladder
from .singularity import RhoBracket, find_rho, h_prime

MAX_TERMS = 200
APPROX_DIGITS = 30


class AsymptoticReport:
	"""
	Growth constants of the main walk.

	Attributes:
	    rho (RhoBracket): Bracket around the dominant singularity.
	    h_prime_rho (float): h'(rho) at the bracket midpoint.
	    h_prime_err (float): Error bound of h_prime_rho.
	    C00 (float): C_{0,0}.
	    C00_err (float): Uncertainty of C00 from the bracket and the h' bound.
	    Cij (dict[tuple[int, int], float]): C_{i,j} for the requested pairs.
	    total_const (float): Constant of the total number of walks of length k.
	    axis_const (float): Constant of the walks ending on the horizontal axis.
	    table (pd.DataFrame | None): Rows (k, exact, approx, ratio), when computed.
	"""

	def __init__(
		self,
		rho: RhoBracket,
		h_prime_rho: float,
		h_prime_err: float,
		C00: float,
		C00_err: float,
		Cij: dict,
		total_const: float,
		axis_const: float,
		table: pd.DataFrame = None,
	) -> None:
		self._rho = rho
		self._h_prime_rho = h_prime_rho
		self._h_prime_err = h_prime_err
		self._C00 = C00
		self._C00_err = C00_err
		self._Cij = dict(Cij)
		self._total_const = total_const
		self._axis_const = axis_const
		self._table = table

	@property
	def rho(self) -> RhoBracket:
		return self._rho

	@property
	def h_prime_rho(self) -> float:
		return self._h_prime_rho

	@property
	def h_prime_err(self) -> float:
		return self._h_prime_err

	@property
	def C00(self) -> float:
		return self._C00

	@property
	def C00_err(self) -> float:
		return self._C00_err

	@property
	def Cij(self) -> dict:
		return dict(self._Cij)

	@property
	def total_const(self) -> float:
		return self._total_const

	@property
	def axis_const(self) -> float:
		return self._axis_const

	@property
	def table(self) -> pd.DataFrame | None:
		return self._table

	def with_table(self, table: pd.DataFrame) -> "AsymptoticReport":
		"""Copy of the report carrying the given growth table."""
		return AsymptoticReport(
			self._rho,
			self._h_prime_rho,
			self._h_prime_err,
			self._C00,
			self._C00_err,
			self._Cij,
			self._total_const,
			self._axis_const,
			table,
		)

	def __repr__(self) -> str:
		return (
			f"AsymptoticReport(rho={self._rho!r}, C00={self._C00!r}, "
			f"C00_err={self._C00_err!r})"
		)


def _term_bound(i: int, j: int, k: int) -> float:
	# |beta_k^(j v 1) (a_k - a_{k+1})| with alpha_k <= 2^(-(2k+1)/2), beta_k <= 2^(-(2k+2)/2)
	exponent = (2 * k + 2) * max(j, 1) + (2 * k + 1) * max(i, 1)
	return 2 * 2.0 ** (-exponent / 2)


def _terms_needed(i: int, j: int) -> int:
	cutoff = helpers.WalkDefaults.TAIL_CUTOFF
	k = 0
	while _term_bound(i, j, k) >= cutoff and k < MAX_TERMS:
		k += 1
	return k


def _x_numeric(alphas: np.ndarray, betas: np.ndarray, i: int, j: int, terms: int) -> float:
	a = (1 - alphas[: terms + 1]) * alphas[: terms + 1] ** i
	steps = a[:-1] - a[1:]
	if j == 0:
		return float(a[0] - int(i == 0) - np.sum(betas[:terms] * steps))
	return float(np.sum((1 - betas[:terms]) * betas[:terms] ** j * steps))


def xhat_numeric(i: int, j: int, z: float) -> tuple[float, float]:
	"""
	xhat_{i,j}(z) summed numerically. Terms are added until the bound on the next one
	drops below the tail cutoff; the geometric remainder, at most twice the first
	neglected bound per component, is returned as the error bound.

	Args:
	    i (int): First index, >= 0.
	    j (int): Second index, >= 0.
	    z (float): The point, 0 < z <= 1/sqrt(8).

	Returns:
	    tuple[float, float]: (value, error_bound).

	Raises:
	    DomainError: If z is outside of (0, 1/sqrt(8)].
	"""
	if min(i, j) < 0:
		raise ValueError(f"Indices must be non-negative, got ({i}, {j}).")
	z = check_domain(z)
	terms_ij, terms_ji = _terms_needed(i, j), _terms_needed(j, i)
	ladder = eval_ladder(z, max(terms_ij, terms_ji) + 1)
	alphas, betas = ladder.alphas, ladder.betas
	value = _x_numeric(alphas, betas, i, j, terms_ij) + _x_numeric(
		alphas, betas, j, i, terms_ji
	)
	err = 2 * _term_bound(i, j, terms_ij) + 2 * _term_bound(j, i, terms_ji)
	return value, err + helpers.WalkDefaults.FLOAT_SLACK


def _c00(rho: float, derivative: float) -> float:
	return (3 * rho - 1) / (-rho * rho * derivative)


def growth_constants(
	rho: RhoBracket, pairs=helpers.WalkDefaults.CONSTANT_PAIRS
) -> AsymptoticReport:
	"""
	The growth constants at the midpoint of the bracket.

	Args:
	    rho (RhoBracket): Bracket around rho.
	    pairs (Iterable[tuple[int, int]]): Pairs (i, j) != (0, 0) for C_{i,j}.

	Returns:
	    AsymptoticReport: The constants, without a table.

	Raises:
	    DerivativeDomainError: If the bracket leaves [1/4, 0.35].
	"""
	z = rho.mid
	derivative, derivative_err = h_prime(z)
	scale = 1 / (-z * derivative)
	C00 = _c00(z, derivative)
	corners = [
		_c00(point, value)
		for point in (rho.lo, rho.hi)
		for value in (derivative - derivative_err, derivative + derivative_err)
	]
	C00_err = max(abs(corner - C00) for corner in corners)
	Cij = {(i, j): xhat_numeric(i, j, z)[0] * scale for i, j in pairs}
	logging.SingletonLogger().log_info(
		f"Growth constants at rho={z!r}: C00={C00!r} +- {C00_err!r}"
	)
	return AsymptoticReport(
		rho,
		derivative,
		derivative_err,
		C00,
		C00_err,
		Cij,
		scale,
		(1 - alpha0_numeric(z)) * scale,
	)


def _log_ratio(exact: int, log_approx: float) -> float:
	if exact == 0:
		return math.nan
	return math.exp(log_approx - math.log(exact))


def _approx(C00: float, rho: float, k: int) -> Decimal:
	with localcontext() as context:
		context.prec = APPROX_DIGITS
		return Decimal(C00) / Decimal(rho) ** k


@helpers.check_int_args("kmin", "kmax", "step")
def growth_table(
	kmin: int, kmax: int, step: int, report: AsymptoticReport = None
) -> pd.DataFrame:
	"""
	Compare the exact q_{0,0,k} with C_{0,0} rho^(-k) for k = kmin, kmin + step, ...
	up to kmax.

	rho^(-k) leaves the float range near k = 670, so the approximation is held as a
	Decimal and the ratio is taken in log space.

	Args:
	    kmin (int): First length.
	    kmax (int): Last length, at most KMAX_GUARD.
	    step (int): Step, >= 1.
	    report (AsymptoticReport | None): Constants to use, computed when omitted.

	Returns:
	    pd.DataFrame: Columns k, exact (int), approx (Decimal), ratio = approx / exact.
	"""
	if step < 1 or kmin > kmax or kmax > helpers.WalkDefaults.KMAX_GUARD:
		raise ValueError(f"Invalid table range kmin={kmin}, kmax={kmax}, step={step}.")
	if report is None:
		report = growth_constants(find_rho())
	rho, C00 = report.rho.mid, report.C00
	counts = origin_counts("main", kmax)
	ks = helpers.inclusive_range(kmin, kmax, step)
	exacts = [counts[k] for k in ks]
	log_approx = [math.log(C00) - k * math.log(rho) for k in ks]
	return pd.DataFrame(
		{
			"k": pd.Series(ks, dtype="int64"),
			"exact": pd.Series(exacts, dtype=object),
			"approx": pd.Series([_approx(C00, rho, k) for k in ks], dtype=object),
			"ratio": pd.Series(
				[_log_ratio(e, value) for e, value in zip(exacts, log_approx)],
				dtype=float,
			),
		}
	)


def asymptotic_report(
	tol: float = helpers.WalkDefaults.TOL,
	kmin: int = helpers.WalkDefaults.TABLE_RANGE[0],
	kmax: int = helpers.WalkDefaults.TABLE_RANGE[1],
	step: int = helpers.WalkDefaults.TABLE_RANGE[2],
) -> AsymptoticReport:
	"""
	Bracket rho to the tolerance, compute the growth constants and attach the table.

	Raises:
	    SignAmbiguity: If the bracket cannot be certified.
	"""
	report = growth_constants(find_rho(tol))
	return report.with_table(growth_table(kmin, kmax, step, report))
