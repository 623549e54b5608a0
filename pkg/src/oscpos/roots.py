"""Safeguarded scalar root refinement."""

from __future__ import annotations

import math
from typing import Callable, Optional, Tuple

from .errors import BracketError, IterationLimitError


def refine_zero(
    u: Callable[[float], float],
    bracket: Tuple[float, float],
    tol: float = 1e-12,
    du: Optional[Callable[[float], float]] = None,
    max_iter: int = 200,
) -> float:
    """Locate a sign change of ``u`` inside ``bracket`` to width ``tol``.

    Newton steps are used when ``du`` is given, secant steps otherwise; any
    step that leaves the current bracket, or fails to halve it within two
    iterations, is replaced by bisection.  The iterate never leaves the
    initial bracket.

    Raises
    ------
    BracketError
        ``u`` does not change sign on the bracket.
    IterationLimitError
        More than ``max_iter`` iterations.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = u(lo), u(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]")

    x = 0.5 * (lo + hi)
    width_two_ago = math.inf
    width_prev = hi - lo
    for _ in range(max_iter):
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        fx = u(x)
        if fx == 0.0:
            return x
        if (fx > 0.0) == (flo > 0.0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        width = hi - lo
        if width <= tol:
            return 0.5 * (lo + hi)

        if du is not None:
            d = du(x)
            cand = x - fx / d if d != 0.0 else math.nan
        else:
            cand = lo - flo * (hi - lo) / (fhi - flo)
        step = abs(cand - x) if math.isfinite(cand) else math.inf

        if step < 0.5 * tol:
            # converged iterate: try to close the bracket around it
            a = max(lo, cand - 0.5 * tol)
            b = min(hi, cand + 0.5 * tol)
            fa, fb = u(a), u(b)
            if fa == 0.0:
                return a
            if fb == 0.0:
                return b
            if (fa > 0.0) != (fb > 0.0):
                return 0.5 * (a + b)

        if not (lo < cand < hi) or width > 0.5 * width_two_ago:
            cand = 0.5 * (lo + hi)
        width_two_ago, width_prev = width_prev, width
        x = cand
    raise IterationLimitError(f"refine_zero exceeded {max_iter} iterations")
