"""Oscillatory transforms (Uf)(x) = int_0^inf f(t) u(xt) dt by arch decomposition.

Substituting t -> t/x gives x (Uf)(x) = int_0^inf g(t) u(t) dt with
g(t) = f(t/x).  Splitting at the positive zeros zeta_k of u (zeta_0 = 0)
turns this into the alternating series sum_k (-1)^k A_k with

    A_k = int_{zeta_k}^{zeta_{k+1}} g(t) |u(t)| dt >= 0,

whose tail is summed with an Euler transformation.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import (
    CapabilityError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    PreconditionError,
)
from .kernels import KernelSpec
from .profiles import ProfileFunction
from .quadrature import integrate_cells, integrate_from_zero, split_points
from .zeros import ZeroSequence, ZeroStream

EULER_START = 8
EULER_MAX_DEPTH = 40
MAX_TERMS = 10_000
ZERO_TOL = 1e-12


@dataclass(frozen=True)
class ArchSeries:
    """Audit record of one evaluation of x (Uf)(x) = sum_k (-1)^k A_k.

    Sums and bounds are in units of x (Uf)(x); divide by ``x`` for the
    transform value.  ``alternating_bound`` is the last computed term, which
    bounds the error of ``partial_sum`` whenever the terms decrease;
    ``tail_bound`` is the error estimate of ``accelerated_sum``.
    """

    x: float
    zeros: ZeroSequence
    terms: Tuple[float, ...]
    partial_sum: float
    accelerated_sum: float
    tail_bound: float
    alternating_bound: float
    warnings: Tuple[str, ...] = ()

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(1 if k % 2 == 0 else -1 for k in range(len(self.terms)))

    @property
    def value(self) -> float:
        return self.accelerated_sum / self.x

    def is_decreasing(self, slack: float = 1e-12) -> bool:
        a = self.terms
        floor = slack * (a[0] if a else 0.0)
        return all(a[k] >= a[k + 1] - floor for k in range(len(a) - 1))


def _binomial_weights(d: int) -> np.ndarray:
    w = np.array([math.comb(d, j) for j in range(d + 1)], dtype=float)
    return w / w.sum()


_WEIGHTS = [_binomial_weights(d) for d in range(EULER_MAX_DEPTH + 1)]


def euler_estimate(partial_sums: Sequence[float], start: int = EULER_START,
                   max_depth: int = EULER_MAX_DEPTH) -> float:
    """Euler transformation of an alternating series from its partial sums.

    The last ``d + 1`` partial sums S_m (m >= ``start``) are averaged
    pairwise ``d`` times, which is the binomial mean; d grows with the number
    of available sums up to ``max_depth``.
    """
    n = len(partial_sums)
    avail = n - start
    if avail < 2:
        return float(partial_sums[-1])
    d = min(avail - 1, max_depth)
    window = np.asarray(partial_sums[n - d - 1:], dtype=float)
    return float(np.dot(_WEIGHTS[d], window))


# --------------------------------------------------------------------------


def _check_kernel(kernel: KernelSpec) -> None:
    if kernel.variant == "cosine":
        raise CapabilityError("the cosine kernel is not arch-decomposed; use fourier_cosine")
    if kernel.variant == "neumann_sqrt":
        raise CapabilityError("Y kernels are evaluated through two Hankel transforms; use y_transform")


def _zero_at(zeros, k: int) -> float:
    return 0.0 if k == 0 else zeros[k - 1]


def arch_integral(kernel: KernelSpec, f: ProfileFunction, x: float, k: int, zeros) -> float:
    """A_k = int_{zeta_k}^{zeta_{k+1}} f(t/x) |u(t)| dt, with zeta_0 = 0.

    ``zeros`` is any indexable ascending sequence of the positive zeros
    (``zeros[0]`` = zeta_1).  Arch 0 is integrated on a mesh graded toward
    the origin using u(t) f(t/x) ~ t**(p - sigma).

    Raises
    ------
    DivergenceError
        p - sigma <= -1, i.e. f u is not integrable at the origin.
    """
    _check_kernel(kernel)
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x!r}", x)
    a, b = _zero_at(zeros, k), zeros[k]
    cut = x * f.support_upper
    if a >= cut:
        return 0.0
    breaks = [x * p for p in f.declared.breakpoints]
    if math.isfinite(cut):
        breaks.append(cut)

    def integrand(t: float) -> float:
        return f(t / x) * abs(kernel(t))

    if k == 0:
        q = kernel.origin_exponent - f.singular_exponent_at_zero
        return integrate_from_zero(integrand, b, q, breaks=breaks)
    return integrate_cells(integrand, split_points(a, b, breaks))


def transform_eval(
    kernel: KernelSpec,
    f: ProfileFunction,
    x: float,
    tol: float = 1e-10,
    max_terms: int = MAX_TERMS,
    n_terms: Optional[int] = None,
) -> Tuple[float, float, ArchSeries]:
    """Evaluate (Uf)(x) by arch decomposition.

    Arches are added until the error estimate of the summed series drops
    below ``tol * max(1, |value|)``, the estimate stops improving, or
    ``max_terms`` arches have been used.  With ``n_terms`` exactly that
    many arches are used.

    Returns
    -------
    value, tail_bound, series

    Raises
    ------
    DivergenceError
        Arch 0 does not converge, or the arch integrals stop decreasing
        toward zero.
    """
    _check_kernel(kernel)
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"x must be a positive finite number, got {x!r}", x)
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}", tol)
    budget = n_terms if n_terms is not None else max_terms
    stream = ZeroStream(kernel, ZERO_TOL)
    cut = x * f.support_upper
    target = tol * x

    terms: List[float] = []
    sums: List[float] = []
    estimates: List[float] = []
    notes: List[str] = []
    bounds: List[float] = []
    n_nonmonotone = 0
    total = 0.0
    value = 0.0
    bound = math.inf
    finite = False

    for k in range(budget):
        if _zero_at(stream, k) >= cut:
            finite = True
            break
        a_k = arch_integral(kernel, f, x, k, stream)
        terms.append(a_k)
        total += a_k if k % 2 == 0 else -a_k
        sums.append(total)
        estimates.append(euler_estimate(sums))
        n = len(terms)

        if n >= 2 and a_k > terms[-2] + 1e-12 * terms[0]:
            n_nonmonotone += 1
            if n_nonmonotone <= 3:
                notes.append(f"arch integrals increase at k={k}: {terms[-2]:.6g} -> {a_k:.6g}")
        if n >= 64 and n % 32 == 0 and a_k > 0.0 and a_k >= terms[n // 2]:
            raise DivergenceError(f"arch integrals do not tend to zero (A_{n // 2} = {terms[n // 2]:.6g}, "
                                  f"A_{k} = {a_k:.6g})")

        value, bound = _current(terms, sums, estimates)
        bounds.append(bound)
        if n_terms is None and n >= 2:
            if bound < target * max(1.0, abs(value) / x):
                # Euler summation also assigns values to divergent series
                if n >= 8 and a_k > 0.0 and a_k >= (1.0 - 1e-6) * terms[n // 2]:
                    raise DivergenceError(f"arch integrals do not decrease (A_{n // 2} = {terms[n // 2]:.6g}, "
                                          f"A_{k} = {a_k:.6g})")
                break
            if n >= 80 and min(bounds[-40:]) >= min(bounds[:-40]):
                notes.append(f"error estimate stalled at {min(bounds) / x:.3g} after {n} arches")
                break
    else:
        if n_terms is None:
            notes.append(f"term budget of {budget} arches exhausted")

    if finite:
        # the profile vanishes beyond the last arch: the sum is exact
        value, bound = total, 0.0
    if n_nonmonotone > 3:
        notes.append(f"{n_nonmonotone} increases among the arch integrals in total")

    series = ArchSeries(
        x=x,
        zeros=ZeroSequence(kernel, tuple(stream.first(len(terms))), ZERO_TOL),
        terms=tuple(terms),
        partial_sum=total,
        accelerated_sum=value,
        tail_bound=bound,
        alternating_bound=terms[-1] if terms else 0.0,
        warnings=tuple(notes),
    )
    return float(value) / x, float(bound) / x, series


def _current(terms, sums, estimates) -> Tuple[float, float]:
    """Best value of the sum so far and its error estimate."""
    n = len(terms)
    # alternating series test: valid while the last terms decrease
    raw_ok = n >= 2 and terms[-1] <= terms[-2]
    raw_bound = terms[-1] if raw_ok else math.inf
    quad_floor = 1e-12 * n * max(terms)
    if n - EULER_START >= 3:
        diffs = abs(estimates[-1] - estimates[-2]), abs(estimates[-2] - estimates[-3])
        euler_bound = 2.0 * max(diffs) + quad_floor
    else:
        euler_bound = math.inf
    if raw_bound <= euler_bound:
        return sums[-1], raw_bound + quad_floor
    return estimates[-1], euler_bound


# --------------------------------------------------------------------------
# named transforms


def fourier_sine(f: ProfileFunction, x: float, tol: float = 1e-10) -> float:
    """int_0^inf f(t) sin(xt) dt."""
    return transform_eval(KernelSpec.sine(), f, x, tol)[0]


def fourier_cosine_eval(f: ProfileFunction, x: float, tol: float = 1e-10) -> Tuple[float, float]:
    """int_0^inf f(t) cos(xt) dt and its error estimate, through

        int_0^inf f cos(xt) dt = (1/x) int_0^inf (-f'(t)) sin(xt) dt,

    which needs t f(t) -> 0 at 0+ and f -> 0 at infinity.
    """
    return _cosine(f, x, tol)[:2]


def _cosine(f: ProfileFunction, x: float, tol: float) -> Tuple[float, float, int]:
    if f.derivative is None:
        raise CapabilityError(f"fourier_cosine needs a derivative of {f.name}")
    if not f.singular_exponent_at_zero < 1.0:
        raise PreconditionError(f"t f(t) does not vanish at 0+ for {f.name}")
    if f.declared.limit_zero_at_infinity is False:
        raise PreconditionError(f"{f.name} does not tend to zero at infinity")
    x = float(x)
    value, bound, series = transform_eval(KernelSpec.sine(), f.negated_derivative(), x, tol * x)
    value, bound = value / x, bound / x
    s = f.support_upper
    if math.isfinite(s):
        # boundary term of the integration by parts at the end of the support
        value += f.evaluator(s) * math.sin(x * s) / x
    return value, bound, series.n_terms


def fourier_cosine(f: ProfileFunction, x: float, tol: float = 1e-10) -> float:
    return fourier_cosine_eval(f, x, tol)[0]


def hankel_eval(nu: float, f: ProfileFunction, x: float, tol: float = 1e-10) -> Tuple[float, float]:
    value, bound, _ = transform_eval(KernelSpec.bessel_sqrt(nu), f, x, tol)
    return value, bound


def hankel_transform(nu: float, f: ProfileFunction, x: float, tol: float = 1e-10) -> float:
    """(H_nu f)(x) = int_0^inf f(t) J_nu(xt) sqrt(xt) dt."""
    return hankel_eval(nu, f, x, tol)[0]


def y_transform_eval(nu: float, f: ProfileFunction, x: float, tol: float = 1e-10) -> Tuple[float, float]:
    return _neumann(nu, f, x, tol)[:2]


def _neumann(nu: float, f: ProfileFunction, x: float, tol: float) -> Tuple[float, float, int]:
    nu = float(nu)
    if not 0.5 < abs(nu) < 1.0:
        raise DomainError(f"y_transform needs 1/2 < |nu| < 1, got {nu!r}", nu)
    angle = nu * math.pi
    cot, csc = math.cos(angle) / math.sin(angle), 1.0 / math.sin(angle)
    h_pos, b_pos, s_pos = transform_eval(KernelSpec.bessel_sqrt(nu), f, x, tol / 4.0)
    h_neg, b_neg, s_neg = transform_eval(KernelSpec.bessel_sqrt(-nu), f, x, tol / 4.0)
    return (cot * h_pos - csc * h_neg, abs(cot) * b_pos + abs(csc) * b_neg,
            s_pos.n_terms + s_neg.n_terms)


def y_transform(nu: float, f: ProfileFunction, x: float, tol: float = 1e-10) -> float:
    """(N_nu f)(x) = int_0^inf f(t) Y_nu(xt) sqrt(xt) dt for 1/2 < |nu| < 1,
    computed as cot(nu pi) (H_nu f)(x) - csc(nu pi) (H_{-nu} f)(x)."""
    return y_transform_eval(nu, f, x, tol)[0]


def scaled_hankel_eval(nu: float, alpha: float, f: ProfileFunction, x: float,
                       tol: float = 1e-10) -> Tuple[float, float]:
    return _scaled(nu, alpha, f, x, tol)[:2]


def _scaled(nu: float, alpha: float, f: ProfileFunction, x: float, tol: float) -> Tuple[float, float, int]:
    nu, alpha = float(nu), float(alpha)
    if not alpha > 1.0:
        raise DomainError(f"alpha must exceed 1, got {alpha!r}", alpha)
    if not (nu > 0.0 and alpha * nu >= 0.5):
        raise DomainError(f"scaled_hankel needs nu > 0 and alpha*nu >= 1/2 (nu={nu!r}, alpha={alpha!r})", nu)
    value, bound, series = transform_eval(KernelSpec.scaled_bessel(nu, alpha), f, x, tol)
    return value, bound, series.n_terms


def scaled_hankel(nu: float, alpha: float, f: ProfileFunction, x: float, tol: float = 1e-10) -> float:
    """int_0^inf f(t) J_nu((xt)^alpha) sqrt(xt) dt."""
    return scaled_hankel_eval(nu, alpha, f, x, tol)[0]


TRANSFORMS = ("sine", "cosine", "hankel", "scaled", "y")


def evaluate(transform: str, f: ProfileFunction, x: float, tol: float = 1e-10,
             nu: Optional[float] = None, alpha: Optional[float] = None) -> Tuple[float, float, int]:
    """Evaluate a named transform at x.

    Returns (value, error estimate, number of arch integrals used).  The
    cosine transform goes through the sine transform of -f', the
    Y-transform through two Hankel transforms.
    """
    if transform == "sine":
        value, bound, series = transform_eval(KernelSpec.sine(), f, x, tol)
        return value, bound, series.n_terms
    if transform == "cosine":
        return _cosine(f, x, tol)
    if nu is None:
        raise DomainError(f"the {transform} transform needs nu")
    if transform == "hankel":
        value, bound, series = transform_eval(KernelSpec.bessel_sqrt(nu), f, x, tol)
        return value, bound, series.n_terms
    if transform == "scaled":
        if alpha is None:
            raise DomainError("the scaled transform needs alpha")
        return _scaled(nu, alpha, f, x, tol)
    if transform == "y":
        return _neumann(nu, f, x, tol)
    raise DomainError(f"unknown transform {transform!r}; choose from {', '.join(TRANSFORMS)}", transform)


# --------------------------------------------------------------------------
# independent check


def brute_force_oracle(kernel: KernelSpec, f: ProfileFunction, x: float, tol: float = 1e-10,
                       max_doublings: int = 40, max_panels: int = 20_000) -> float:
    """int_0^inf f(t) u(xt) dt by plain adaptive quadrature on a growing range.

    No zeros and no series acceleration are used.  The range [0, T] is
    doubled until two consecutive panels [T, 2T] each contribute less than
    ``tol / 4``.  Works for every kernel variant, including cosine and Y,
    but only profiles decaying fast enough for the range to settle before
    ``max_panels`` four-period subpanels have been integrated.

    Raises
    ------
    DivergenceError
        No convergence after ``max_doublings`` doublings or ``max_panels``
        subpanels.
    ConvergenceError
        The panel quadratures report errors above ``tol``.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x!r}", x)

    def h(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return f(t) * kernel(x * t)

    support = f.support_upper
    brks = sorted(p for p in f.declared.breakpoints if p > 0.0)
    period = 2.0 * math.pi / x
    head_end = max(1.0, period)
    if math.isfinite(support):
        head_end = min(head_end, support)
    err_total = 0.0

    def piece(lo: float, hi: float) -> float:
        nonlocal err_total
        inner = [p for p in brks if lo < p < hi]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", IntegrationWarning)
            val, err = quad(h, lo, hi, points=inner or None, limit=1000,
                            epsabs=tol / 64.0, epsrel=1e-13)
        err_total += err
        return val

    total = piece(0.0, head_end)
    t_lo = head_end
    quiet = 0
    used = 0
    for _ in range(max_doublings):
        if t_lo >= support:
            break
        t_hi = min(2.0 * t_lo, support)
        n_sub = max(1, math.ceil((t_hi - t_lo) / (4.0 * period)))
        used += n_sub
        if used > max_panels:
            raise DivergenceError(f"brute-force quadrature did not settle by t = {t_lo:g} "
                                  f"within {max_panels} subpanels")
        edges = np.linspace(t_lo, t_hi, n_sub + 1)
        panel = sum(piece(a, b) for a, b in zip(edges[:-1], edges[1:]))
        total += panel
        t_lo = t_hi
        quiet = quiet + 1 if abs(panel) < tol / 4.0 else 0
        if quiet >= 2:
            break
    else:
        raise DivergenceError(f"brute-force quadrature did not settle by t = {t_lo:g}")
    if err_total > tol:
        raise ConvergenceError(f"brute-force quadrature error estimate {err_total:.3g} exceeds tol")
    return total
