"""Gauss-Legendre quadrature with adaptive bisection and a graded mesh for
integrable power singularities at the left endpoint."""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import DivergenceError, IterationLimitError

GL_ORDER = 32
REL_TOL = 1e-12
GRADING_RATIO = 0.25
MAX_GRADING_DEPTH = 60

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(GL_ORDER)


def gauss_legendre(fun: Callable[[float], float], a: float, b: float) -> float:
    """Fixed 32-point Gauss-Legendre rule on [a, b]."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    total = 0.0
    for xi, wi in zip(_NODES, _WEIGHTS):
        total += wi * fun(mid + half * xi)
    return half * total


def adaptive_gl(
    fun: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = REL_TOL,
    abs_floor: float = 0.0,
    max_depth: int = 40,
) -> float:
    """Integrate by bisecting until a cell and its two halves agree to
    ``rel_tol * (1 + |estimate|)`` (scaled by the cell's share of [a, b])."""
    if b == a:
        return 0.0
    whole = gauss_legendre(fun, a, b)
    scale = rel_tol * (1.0 + abs(whole)) + abs_floor
    total = 0.0
    stack = [(a, b, whole, 0)]
    span = b - a
    while stack:
        lo, hi, est, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = gauss_legendre(fun, lo, mid)
        right = gauss_legendre(fun, mid, hi)
        if abs(left + right - est) <= scale * max((hi - lo) / span, 1e-3) or depth >= max_depth:
            if depth >= max_depth and abs(left + right - est) > scale:
                raise IterationLimitError(f"quadrature did not settle on [{lo!r}, {hi!r}]")
            total += left + right
        else:
            stack.append((mid, hi, right, depth + 1))
            stack.append((lo, mid, left, depth + 1))
    return total


def integrate_cells(fun: Callable[[float], float], points: Sequence[float], **kw) -> float:
    """Sum of :func:`adaptive_gl` over consecutive ``points``."""
    return sum(adaptive_gl(fun, lo, hi, **kw) for lo, hi in zip(points[:-1], points[1:]) if hi > lo)


def split_points(a: float, b: float, breaks: Iterable[float]) -> list:
    return [a] + sorted(p for p in breaks if a < p < b) + [b]


def integrate_from_zero(
    fun: Callable[[float], float],
    b: float,
    exponent: float,
    tol: float = 1e-13,
    breaks: Iterable[float] = (),
) -> float:
    """Integrate ``fun`` over (0, b] where fun(t) ~ c * t**exponent as t -> 0+.

    Cells [b r^(j+1), b r^j] with r = 1/4 are added until a cell contributes
    less than ``tol / 10`` relative to the running total; the remaining piece
    (0, c] is added analytically as c * fun(c) / (exponent + 1).

    Raises
    ------
    DivergenceError
        ``exponent <= -1``: the integral does not exist.
    """
    q = float(exponent)
    if not q > -1.0:
        raise DivergenceError(f"integrand ~ t^{q:g} at 0 is not integrable")
    if not b > 0.0:
        return 0.0
    breaks = [p for p in breaks if 0.0 < p < b]
    # first grading cell ends below every breakpoint
    top = min(breaks) if breaks else b
    total = integrate_cells(fun, split_points(top, b, breaks))
    hi = top
    for _ in range(MAX_GRADING_DEPTH):
        lo = hi * GRADING_RATIO
        cell = adaptive_gl(fun, lo, hi)
        total += cell
        hi = lo
        tail = hi * fun(hi) / (q + 1.0)
        if abs(tail) < 0.1 * tol * (1.0 + abs(total)) and abs(cell) < tol * (1.0 + abs(total)):
            break
    return total + hi * fun(hi) / (q + 1.0)


def local_exponent(fun: Callable[[float], float], t: float = 1e-8, ratio: float = 0.25) -> Optional[float]:
    """Estimate q in fun(t) ~ c t**q from two points near 0; None if fun vanishes there."""
    a, b = fun(t), fun(t * ratio)
    if a == 0.0 or b == 0.0 or (a > 0) != (b > 0):
        return None
    return math.log(b / a) / math.log(ratio)
