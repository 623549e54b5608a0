"""Positive zeros of the supported kernels, in ascending order."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np

from . import special
from .errors import BracketError, DomainError, IterationLimitError, SpanError
from .kernels import KernelSpec
from .roots import refine_zero
from .sturm import Trajectory

__all__ = [
    "ZeroSequence",
    "ZeroStream",
    "bessel_j_zero",
    "bessel_j_zeros",
    "enumerate_zeros",
    "mcmahon_estimate",
    "refine_zero",
    "trajectory_from_kernel",
]

SCAN_STEP = math.pi / 8.0
SCAN_BUDGET = 200_000


def mcmahon_estimate(nu: float, k: int) -> float:
    """Leading McMahon term (k + nu/2 - 1/4) pi for the k-th zero of J_nu."""
    if k < 1:
        raise DomainError(f"zero index must be >= 1, got {k!r}", k)
    return (k + 0.5 * nu - 0.25) * math.pi


def _j(nu: float) -> Callable[[float], float]:
    return lambda t: special.jv(nu, t)


def _jp(nu: float) -> Callable[[float], float]:
    return lambda t: special.jv_prime(nu, t)


def _scan_start(nu: float) -> float:
    # j_{nu,1} > nu for nu >= 0; for -1 < nu < 0, J_nu > 0 on (0, j_{nu,1})
    return max(nu, 0.0) + 1e-6


class _SignScanner:
    """Walk forward in steps of SCAN_STEP yielding sign-change brackets."""

    def __init__(self, u: Callable[[float], float], start: float, step: float = SCAN_STEP):
        self.u = u
        self.t = start
        self.val = u(start)
        self.step = step
        self.evals = 0

    def next_bracket(self) -> Tuple[float, float]:
        while True:
            self.evals += 1
            if self.evals > SCAN_BUDGET:
                raise IterationLimitError("sign scan budget exhausted")
            nxt = self.t + self.step
            v = self.u(nxt)
            lo, vlo = self.t, self.val
            self.t, self.val = nxt, v
            if v == 0.0:
                # step onto an exact zero: nudge past it
                self.t = nxt + 1e-9 * max(1.0, nxt)
                self.val = self.u(self.t)
                return lo, self.t
            if (vlo > 0.0) != (v > 0.0):
                return lo, nxt


def bessel_j_zeros(nu: float, n: int, tol: float = 1e-12) -> List[float]:
    """First ``n`` positive zeros of J_nu by a single sign scan."""
    nu = float(nu)
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu!r}", nu)
    if n < 1:
        return []
    tol = max(tol, 1e-13)
    f, fp = _j(nu), _jp(nu)
    scan = _SignScanner(f, _scan_start(nu))
    out: List[float] = []
    while len(out) < n:
        lo, hi = scan.next_bracket()
        r = refine_zero(f, (lo, hi), tol=tol, du=fp)
        if out and r - out[-1] < 10.0 * tol:
            raise BracketError(f"roots {out[-1]!r} and {r!r} coincide")
        out.append(r)
    return out


def bessel_j_zero(nu: float, k: int, tol: float = 1e-12) -> float:
    """The k-th positive zero j_{nu,k} of J_nu.

    For large k with a small McMahon correction the zero is bracketed
    directly around the two-term McMahon estimate; otherwise a sign scan
    from the origin counts zeros up to k.
    """
    nu = float(nu)
    if not nu > -1.0:
        raise DomainError(f"nu must exceed -1, got {nu!r}", nu)
    if k < 1:
        raise DomainError(f"zero index must be >= 1, got {k!r}", k)
    tol = max(tol, 1e-13)
    beta = mcmahon_estimate(nu, k)
    mu = 4.0 * nu * nu
    correction = (mu - 1.0) / (8.0 * beta)
    if k > 5 and abs(correction) < 0.2:
        centre = beta - correction
        lo, hi = centre - 1.0, centre + 1.0
        f = _j(nu)
        if (f(lo) > 0.0) != (f(hi) > 0.0):
            return refine_zero(f, (lo, hi), tol=tol, du=_jp(nu))
    return bessel_j_zeros(nu, k, tol)[-1]


# --------------------------------------------------------------------------


class ZeroStream:
    """Lazily extended ascending zeros of a kernel.

    ``stream[k]`` is zeta_{k+1}; the zero at the origin is never stored.
    """

    def __init__(self, kernel: KernelSpec, tol: float = 1e-12):
        self.kernel = kernel
        self.tol = max(float(tol), 1e-13)
        self._zeros: List[float] = []
        v = kernel.variant
        if v in ("bessel_sqrt", "scaled_bessel"):
            nu = kernel.nu
            f, fp = _j(nu), _jp(nu)
            self._scanner = _SignScanner(f, _scan_start(nu))
            self._refine = lambda br: refine_zero(f, br, tol=self.tol, du=fp)
        elif v == "neumann_sqrt":
            nu = kernel.nu
            f = lambda t: special.yv(nu, t)
            self._scanner = _SignScanner(f, 1e-6)
            self._refine = lambda br: refine_zero(f, br, tol=self.tol)
        else:
            self._scanner = None

    def _next(self) -> float:
        n = len(self._zeros) + 1
        v = self.kernel.variant
        if v == "sine":
            return n * math.pi
        if v == "cosine":
            return (n - 0.5) * math.pi
        if v == "ode":
            t_need = 64.0
            for _ in range(20):
                traj = self.kernel.trajectory(t_need)
                if len(traj.detected_roots) >= n:
                    return traj.detected_roots[n - 1]
                t_need = 2.0 * traj.span[1]
            raise SpanError(f"ode kernel has fewer than {n} roots on [0, {t_need}]")
        r = self._refine(self._scanner.next_bracket())
        if self._zeros:
            prev = self._zeros[-1]
            if v == "scaled_bessel":
                prev = prev ** self.kernel.alpha
            if r - prev < 10.0 * self.tol:
                raise BracketError(f"roots {prev!r} and {r!r} coincide")
        if v == "scaled_bessel":
            return r ** (1.0 / self.kernel.alpha)
        return r

    def __getitem__(self, k: int) -> float:
        while len(self._zeros) <= k:
            self._zeros.append(self._next())
        return self._zeros[k]

    def first(self, n: int) -> List[float]:
        if n > 0:
            self[n - 1]
        return self._zeros[:n]

    def __iter__(self) -> Iterator[float]:
        k = 0
        while True:
            yield self[k]
            k += 1


@dataclass(frozen=True)
class ZeroSequence:
    kernel: KernelSpec
    zeros: Tuple[float, ...]
    refinement_tolerance: float

    @property
    def count(self) -> int:
        return len(self.zeros)

    def __len__(self) -> int:
        return len(self.zeros)

    def __getitem__(self, k):
        return self.zeros[k]

    @property
    def spacings(self) -> np.ndarray:
        return np.diff(np.asarray(self.zeros))

    def check_invariants(self) -> List[str]:
        """Return violations of the ordering, sign-change and simplicity invariants."""
        problems = []
        z = self.zeros
        u = self.kernel
        for a, b in zip(z[:-1], z[1:]):
            if not b > a:
                problems.append(f"not increasing at {a!r}, {b!r}")
        delta = 10.0 * self.refinement_tolerance
        h = 1e-6
        slopes = []
        for r in z:
            if not u(r - delta) * u(r + delta) < 0.0:
                problems.append(f"no sign change at {r!r}")
            slopes.append(abs(u(r + h) - u(r - h)) / (2.0 * h))
        if slopes:
            floor = 1e-8 * max(1.0, slopes[0])
            for r, s in zip(z, slopes):
                if not s > floor:
                    problems.append(f"derivative vanishes at {r!r}")
        return problems


def enumerate_zeros(kernel: KernelSpec, n: int, tol: float = 1e-12) -> ZeroSequence:
    """The first ``n`` positive zeros of ``kernel`` as a :class:`ZeroSequence`."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n!r}", n)
    tol = max(float(tol), 1e-13)
    if kernel.variant == "bessel_sqrt":
        zs = bessel_j_zeros(kernel.nu, n, tol)
    else:
        zs = ZeroStream(kernel, tol).first(n)
    return ZeroSequence(kernel, tuple(zs), tol)


def trajectory_from_kernel(kernel: KernelSpec, span_end: float, n_grid: int = 512,
                           tol: float = 1e-13) -> Trajectory:
    """A :class:`Trajectory` whose dense output is the kernel itself.

    Used where the special-function evaluation of u is more accurate than
    an integrated solution (convexity margins near the nodes).
    """
    if kernel.variant == "ode":
        return kernel.trajectory(span_end)
    stream = ZeroStream(kernel, tol)
    roots = []
    for z in stream:
        if z >= span_end:
            break
        roots.append(z)
    grid = np.linspace(0.0, span_end, n_grid)
    start = grid[1] * 1e-3 if not kernel.vanishes_at_origin else 0.0
    grid[0] = start
    uv = np.array([kernel(t) for t in grid])
    dv = np.array([kernel.derivative(t) if t > 0 else math.nan for t in grid])
    return Trajectory(
        grid=grid,
        u_values=uv,
        u_prime_values=dv,
        dense=lambda t: (kernel(t), kernel.derivative(t)),
        detected_roots=tuple(roots),
        span=(start, span_end),
        phi=kernel.normal_form_phi(),
        origin_is_root=kernel.vanishes_at_origin,
        abs_accuracy=1e-14,
        rtol=1e-14,
    )
