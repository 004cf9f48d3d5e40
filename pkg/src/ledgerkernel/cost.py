"""Reciprocal cost J(x) = (x + 1/x)/2 - 1 and its property checks.

Functions accept floats (the production path) or ``fractions.Fraction``
(exact path); with a Fraction the result is an exact Fraction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, IterationLimitError

Real = Union[float, int, Fraction]

PHI = (1 + math.sqrt(5)) / 2


def _check_ratio(x: Real) -> None:
    if isinstance(x, Fraction):
        if x <= 0:
            raise DomainError(f"ratio must be positive, got {x}")
        return
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"ratio must be positive and finite, got {x!r}")


def eval_cost(x: Real) -> Real:
    _check_ratio(x)
    if isinstance(x, Fraction):
        return (x + 1 / x) / 2 - 1
    x = float(x)
    return 0.5 * (x + 1.0 / x) - 1.0


def composition_residual(x: Real, y: Real) -> Real:
    """J(xy) + J(x/y) - 2J(x)J(y) - 2J(x) - 2J(y); identically zero for J."""
    _check_ratio(x)
    _check_ratio(y)
    fx, fy = eval_cost(x), eval_cost(y)
    return eval_cost(x * y) + eval_cost(x / y) - 2 * fx * fy - 2 * fx - 2 * fy


def log_lift(t: float) -> float:
    """cosh(t) - 1, evaluated as 2 sinh^2(t/2) so small |t| keeps full precision."""
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    try:
        s = math.sinh(t / 2)
    except OverflowError:
        return math.inf
    return 2.0 * s * s


def calibration_ratio(t: float) -> float:
    if t == 0:
        raise DomainError("calibration ratio is a limit at t = 0, not a value")
    return 2.0 * log_lift(t) / (t * t)


def fixed_point_phi(x0: float = 1.0, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Iterate x <- 1 + 1/x to its fixed point, the golden ratio."""
    _check_ratio(x0)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter!r}")
    x = float(x0)
    for _ in range(max_iter):
        nxt = 1.0 + 1.0 / x
        if abs(nxt - x) <= tol and abs(nxt * nxt - nxt - 1.0) <= 10 * tol:
            return nxt
        x = nxt
    raise IterationLimitError(f"no convergence within {max_iter} iterations", x)


def bal(x: Real, tol: float = 0.0) -> bool:
    """Perfect balance: J(x) <= tol."""
    if tol < 0:
        raise DomainError(f"tol must be nonnegative, got {tol!r}")
    return eval_cost(x) <= tol


def exists(x) -> bool:
    """True iff J(x) is finite, i.e. x is a positive finite number."""
    try:
        if isinstance(x, Fraction):
            return x > 0
        x = float(x)
    except (TypeError, ValueError, OverflowError):
        return False
    return math.isfinite(x) and x > 0


def log_grid(n: int, lo: float, hi: float) -> list[float]:
    """n points uniformly spaced in ln x over [lo, hi]."""
    if n < 2:
        raise DomainError("grid needs at least 2 points")
    _check_ratio(lo)
    _check_ratio(hi)
    a, b = math.log(lo), math.log(hi)
    return [math.exp(a + (b - a) * i / (n - 1)) for i in range(n)]


@dataclass(frozen=True)
class GridReport:
    reciprocity: float
    composition: float
    min_cost: float
    calibration: float

    REL_TOL_IDENTITY = 1e-12
    REL_TOL_RESIDUAL = 1e-9

    @property
    def ok(self) -> bool:
        return (
            self.reciprocity <= self.REL_TOL_IDENTITY
            and self.composition <= self.REL_TOL_RESIDUAL
            and self.min_cost >= -1e-15
            and self.calibration <= 1.0
        )


def check_grid(n: int, lo: float, hi: float) -> GridReport:
    """Scaled worst-case residuals of the cost identities over an n x n log grid.

    reciprocity is |J(x) - J(1/x)| / max(1, J(x)); composition is
    |residual| / (1 + |J(xy)| + |J(x/y)|); calibration is the worst
    |ratio(t) - 1| / (t^2/10) over t in {1e-2, 1e-3, 1e-4}, so <= 1 passes.
    """
    grid = log_grid(n, lo, hi)
    rec = 0.0
    mn = math.inf
    for x in grid:
        j = eval_cost(x)
        mn = min(mn, j)
        rec = max(rec, abs(j - eval_cost(1 / x)) / max(1.0, j))
    comp = 0.0
    for x in grid:
        for y in grid:
            scale = 1 + abs(eval_cost(x * y)) + abs(eval_cost(x / y))
            comp = max(comp, abs(composition_residual(x, y)) / scale)
    cal = max(abs(calibration_ratio(t) - 1) / (t * t / 10) for t in (1e-2, 1e-3, 1e-4))
    return GridReport(rec, comp, mn, cal)
