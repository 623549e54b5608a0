"""Normal-form ODE u'' + phi(t) u = 0: integration, oscillation criteria and
Sturm comparison / convexity checks on computed solutions."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import IntegrationWarning, quad, solve_ivp

from .errors import PreconditionError, StiffnessError
from .roots import refine_zero

MONOTONICITY = (
    "strictly_increasing",
    "increasing",
    "constant",
    "decreasing",
    "strictly_decreasing",
    "none",
)
HOLDS, FAILS, UNDETERMINED = "holds", "fails", "undetermined"


@dataclass(frozen=True)
class PhiAsymptotics:
    """Declared limits of phi; ``None`` means unknown."""

    limit_t2phi_at_infinity: Optional[float] = None
    limit_t2phi_at_zero: Optional[float] = None
    integral_diverges: Optional[bool] = None


@dataclass(frozen=True)
class PhiSpec:
    """Coefficient phi(t) of the normal form, t > 0."""

    evaluator: Callable[[float], float]
    declared_monotonicity: str = "none"
    asymptotics: Optional[PhiAsymptotics] = None
    name: str = "phi"
    working_range: Tuple[float, float] = (1e-2, 1e3)

    def __post_init__(self):
        if self.declared_monotonicity not in MONOTONICITY:
            raise ValueError(f"unknown monotonicity {self.declared_monotonicity!r}")

    def __call__(self, t: float) -> float:
        return self.evaluator(t)

    @property
    def increasing(self) -> bool:
        return self.declared_monotonicity in ("strictly_increasing", "increasing", "constant")

    @property
    def decreasing(self) -> bool:
        return self.declared_monotonicity in ("strictly_decreasing", "decreasing", "constant")

    def spot_check(self, n_pairs: int = 200, seed: int = 0) -> List[str]:
        """Sample pairs t1 < t2 and report contradictions of the declaration."""
        lo, hi = self.working_range
        rng = np.random.default_rng(seed)
        ts = np.exp(rng.uniform(math.log(lo), math.log(hi), size=(n_pairs, 2)))
        ts.sort(axis=1)
        problems = []
        mono = self.declared_monotonicity
        for t1, t2 in ts:
            a, b = self(t1), self(t2)
            if not (math.isfinite(a) and math.isfinite(b)):
                problems.append(f"phi not finite near t={t1:.6g}")
                continue
            slack = 1e-12 * max(abs(a), abs(b))
            if mono == "strictly_increasing" and not b > a:
                problems.append(f"phi({t2:.6g}) <= phi({t1:.6g})")
            elif mono == "increasing" and b < a - slack:
                problems.append(f"phi({t2:.6g}) < phi({t1:.6g})")
            elif mono == "constant" and abs(b - a) > slack:
                problems.append(f"phi({t2:.6g}) != phi({t1:.6g})")
            elif mono == "decreasing" and b > a + slack:
                problems.append(f"phi({t2:.6g}) > phi({t1:.6g})")
            elif mono == "strictly_decreasing" and not b < a:
                problems.append(f"phi({t2:.6g}) >= phi({t1:.6g})")
        return problems


def phi_constant(c: float = 1.0) -> PhiSpec:
    c = float(c)
    return PhiSpec(
        lambda t: c,
        "constant",
        PhiAsymptotics(math.inf if c > 0 else 0.0, 0.0, c > 0),
        name=f"constant({c:g})",
    )


def phi_bessel(nu: float) -> PhiSpec:
    """phi(t) = 1 + (1 - 4 nu^2) / (4 t^2), solved by sqrt(t) J_nu(t)."""
    nu = float(nu)
    c = (1.0 - 4.0 * nu * nu) / 4.0
    if abs(nu) > 0.5:
        mono = "strictly_increasing"
    elif abs(nu) < 0.5:
        mono = "strictly_decreasing"
    else:
        mono = "constant"
    return PhiSpec(
        (lambda t: 1.0) if c == 0.0 else (lambda t: 1.0 + c / (t * t)),
        mono,
        PhiAsymptotics(math.inf, c, True),
        name=f"bessel({nu:g})",
    )


def phi_scaled_bessel(nu: float, alpha: float) -> PhiSpec:
    """phi for sqrt(t) J_nu(t^alpha)."""
    nu, alpha = float(nu), float(alpha)
    c = (1.0 - 4.0 * alpha * alpha * nu * nu) / 4.0
    a2 = alpha * alpha
    if alpha > 1.0 and alpha * abs(nu) >= 0.5:
        mono = "strictly_increasing"
    else:
        mono = "none"
    return PhiSpec(
        lambda t: a2 * t ** (2.0 * alpha - 2.0) + c / (t * t),
        mono,
        PhiAsymptotics(math.inf, c, alpha >= 0.5),
        name=f"scaled_bessel({nu:g},{alpha:g})",
    )


# --------------------------------------------------------------------------
# trajectories


@dataclass(frozen=True)
class Trajectory:
    """A solution u on [span[0], span[1]] with dense evaluation.

    ``dense(t)`` returns ``(u(t), u'(t))``.  ``abs_accuracy`` is the
    pointwise accuracy believed for u and is what the convexity checks treat
    as numerical noise.
    """

    grid: np.ndarray
    u_values: np.ndarray
    u_prime_values: np.ndarray
    dense: Callable[[float], Tuple[float, float]]
    detected_roots: Tuple[float, ...]
    span: Tuple[float, float]
    phi: Optional[PhiSpec] = None
    origin_is_root: bool = False
    abs_accuracy: float = 1e-9
    rtol: float = 1e-10

    def u(self, t: float) -> float:
        return self.dense(t)[0]

    def du(self, t: float) -> float:
        return self.dense(t)[1]

    def residual(self) -> float:
        """Largest |u'' + phi u| / (1 + |u|) at step midpoints.

        u'' is taken from a five-point stencil on the dense u'.
        """
        if self.phi is None or len(self.grid) < 2:
            return 0.0
        worst = 0.0
        mids = 0.5 * (self.grid[1:] + self.grid[:-1])
        steps = np.diff(self.grid)
        for m, step in zip(mids, steps):
            h = min(1e-3, 0.1 * step)
            d = [self.du(m + k * h) for k in (-2, -1, 1, 2)]
            upp = (d[0] - 8.0 * d[1] + 8.0 * d[2] - d[3]) / (12.0 * h)
            u = self.u(m)
            worst = max(worst, abs(upp + self.phi(m) * u) / (1.0 + abs(u)))
        return worst


def _sign_changes(f, a: float, b: float, n_sub: int) -> List[Tuple[float, float]]:
    pts = np.linspace(a, b, n_sub + 1)
    vals = [f(p) for p in pts]
    out = []
    for i in range(n_sub):
        if vals[i] == 0.0 and i > 0:
            continue
        if (vals[i] > 0.0 and vals[i + 1] < 0.0) or (vals[i] < 0.0 and vals[i + 1] > 0.0):
            out.append((pts[i], pts[i + 1]))
        elif vals[i + 1] == 0.0 and i + 1 == n_sub:
            out.append((pts[i], pts[i + 1]))
    return out


def solve_normal_form(
    phi: PhiSpec,
    init: Tuple[float, float, float],
    span: Tuple[float, float],
    rtol: float = 1e-10,
    atol: float = 1e-12,
    max_step: float = 0.25,
) -> Trajectory:
    """Integrate u'' + phi(t) u = 0 from ``init = (t0, u0, u0')``.

    DOP853 with dense output; sign changes of u are located on a
    sub-sampling of every step and refined on the dense output.
    """
    t0, u0, du0 = (float(v) for v in init)
    a, b = float(span[0]), float(span[1])
    if a != t0:
        raise PreconditionError(f"span must start at t0={t0!r}")
    if not b > a:
        raise PreconditionError("span must be increasing")

    def rhs(t, y):
        return (y[1], -phi(t) * y[0])

    sol = solve_ivp(
        rhs, (a, b), [u0, du0], method="DOP853", dense_output=True,
        rtol=rtol, atol=atol, max_step=max_step,
    )
    if sol.status < 0:
        raise StiffnessError(f"integration failed: {sol.message}")

    dense_sol = sol.sol

    def dense(t):
        y = dense_sol(t)
        return float(y[0]), float(y[1])

    def u_of(t):
        return float(dense_sol(t)[0])

    def du_of(t):
        return float(dense_sol(t)[1])

    roots: List[float] = []
    grid = sol.t
    for i in range(len(grid) - 1):
        for lo, hi in _sign_changes(u_of, grid[i], grid[i + 1], 4):
            r = refine_zero(u_of, (lo, hi), tol=1e-13, du=du_of)
            if r <= a:
                continue
            if roots and r - roots[-1] < 1e-12:
                continue
            roots.append(r)
    return Trajectory(
        grid=np.asarray(grid),
        u_values=np.asarray(sol.y[0]),
        u_prime_values=np.asarray(sol.y[1]),
        dense=dense,
        detected_roots=tuple(roots),
        span=(a, b),
        phi=phi,
        origin_is_root=(u0 == 0.0),
        abs_accuracy=max(100.0 * rtol, atol),
        rtol=rtol,
    )


# --------------------------------------------------------------------------
# oscillation criteria


@dataclass(frozen=True)
class OscillationClassification:
    a1: str
    a2: str
    a3: str
    b1: str
    b2: str
    numeric_evidence: Dict[str, list] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "a1": self.a1, "a2": self.a2, "a3": self.a3,
            "b1": self.b1, "b2": self.b2,
            "numeric_evidence": self.numeric_evidence,
        }

    @property
    def oscillatory(self) -> bool:
        return HOLDS in (self.a1, self.a2, self.a3)


def _against_quarter(limit: Optional[float]) -> Optional[str]:
    if limit is None:
        return None
    return HOLDS if limit > 0.25 else FAILS


def _below_quarter(limit: Optional[float]) -> Optional[str]:
    if limit is None:
        return None
    return HOLDS if limit < 0.25 else FAILS


def _band(samples: Sequence[float], want_above: bool) -> str:
    """Three-valued decision of a sampled liminf/limsup against 1/4."""
    lo, hi = 0.25 * 0.9, 0.25 * 1.1
    if want_above:
        est = min(samples)
        if est > hi:
            return HOLDS
        if max(samples) < lo:
            return FAILS
    else:
        est = max(samples)
        if est < lo:
            return HOLDS
        if min(samples) > hi:
            return FAILS
    return UNDETERMINED


def _quad(fun, a: float, b: float) -> float:
    # the limits are estimates anyway; slow tails only cost accuracy here
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        return quad(fun, a, b, limit=200)[0]


def classify_oscillation(phi: PhiSpec, n_samples: int = 40, decades: float = 6.0) -> OscillationClassification:
    """Evaluate the (A1)-(A3) oscillation and (B1)/(B2) non-oscillation
    criteria.  Declared asymptotics decide exactly; otherwise the limits are
    estimated on geometric grids and the answer may be ``undetermined``."""
    asym = phi.asymptotics or PhiAsymptotics()
    evidence: Dict[str, list] = {}
    far = np.logspace(0.0, decades, n_samples)
    near = np.logspace(-decades, 0.0, n_samples)
    tail = far[n_samples // 2:]
    head = near[: n_samples // 2]

    a1 = _against_quarter(asym.limit_t2phi_at_infinity)
    if a1 is None:
        vals = [t * t * phi(t) for t in tail]
        evidence["a1"] = [[float(t), float(v)] for t, v in zip(tail, vals)]
        a1 = _band(vals, want_above=True)

    if asym.integral_diverges is not None:
        a2 = HOLDS if asym.integral_diverges else FAILS
    else:
        pieces = [_quad(phi, far[i], far[i + 1]) for i in range(n_samples - 1)]
        evidence["a2"] = [[float(far[i + 1]), float(p)] for i, p in enumerate(pieces)]
        last = pieces[-(n_samples // 4):]
        ratios = [last[i + 1] / last[i] for i in range(len(last) - 1) if last[i] > 0]
        if ratios and min(ratios) > 0.999:
            a2 = HOLDS
        elif ratios and max(ratios) < 0.9:
            a2 = FAILS
        else:
            a2 = UNDETERMINED

    if a2 == HOLDS:
        a3 = HOLDS
    elif asym.limit_t2phi_at_infinity is not None:
        a3 = _against_quarter(asym.limit_t2phi_at_infinity)
    else:
        vals = [t * _quad(phi, t, math.inf) for t in tail]
        evidence["a3"] = [[float(t), float(v)] for t, v in zip(tail, vals)]
        a3 = _band(vals, want_above=True)

    b1 = _below_quarter(asym.limit_t2phi_at_zero)
    if b1 is None:
        vals = [t * t * phi(t) for t in head]
        evidence["b1"] = [[float(t), float(v)] for t, v in zip(head, vals)]
        b1 = _band(vals, want_above=False)

    b2 = _below_quarter(asym.limit_t2phi_at_zero)
    if b2 is None:
        vals = [_quad(lambda s: s * s * phi(s), 0.0, t) / t for t in head]
        evidence["b2"] = [[float(t), float(v)] for t, v in zip(head, vals)]
        b2 = _band(vals, want_above=False)

    return OscillationClassification(a1, a2, a3, b1, b2, evidence)


# --------------------------------------------------------------------------
# arch convexity


@dataclass(frozen=True)
class ArchCheck:
    k: int
    zeta: float
    left_gap: float
    right_gap: float
    spacing_ok: bool
    worst_margin: float
    passed: bool


@dataclass(frozen=True)
class ConvexityReport:
    mode: str
    reversed: bool
    rows: Tuple[ArchCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def worst_margin(self) -> float:
        return min(r.worst_margin for r in self.rows)


def check_arch_convexity(traj: Trajectory, mode: str = "strict", reversed: bool = False,
                         n_grid: int = 64) -> ConvexityReport:
    """Check that the wave of arches decreases around every interior root.

    For increasing phi (``reversed=False``) at each interior root zeta_k:
    the left gap exceeds the right gap and |u(zeta_k - s)| > |u(zeta_k + s)|
    for s on an ``n_grid`` point grid of (0, right gap).  ``reversed=True``
    swaps both inequalities (decreasing phi).  ``non_strict`` mode accepts
    equality up to the trajectory's numerical noise.

    The amplitude margin at each s is reported relative to the local size
    of u, because the absolute difference vanishes like s**4 at the node.
    """
    if mode not in ("strict", "non_strict"):
        raise ValueError(f"unknown mode {mode!r}")
    roots = list(traj.detected_roots)
    if traj.origin_is_root:
        roots.insert(0, traj.span[0])
    if len(roots) < 3:
        raise PreconditionError(f"need at least 3 roots, trajectory has {len(roots)}")
    noise = traj.abs_accuracy
    rows = []
    for k in range(1, len(roots) - 1):
        z = roots[k]
        left, right = z - roots[k - 1], roots[k + 1] - z
        # the expected shorter side is right for increasing phi, left for
        # decreasing; the grid stays inside both neighbouring arches
        short = min(left, right)
        gap = (right - left) if reversed else (left - right)
        scale = max(left, right)
        if mode == "strict":
            spacing_ok = gap > 1e-10 * scale
        else:
            spacing_ok = gap >= -1e-10 * scale
        worst = math.inf
        ok = spacing_ok
        for j in range(1, n_grid + 1):
            s = short * j / (n_grid + 1)
            big = abs(traj.u(z + s)) if reversed else abs(traj.u(z - s))
            small = abs(traj.u(z - s)) if reversed else abs(traj.u(z + s))
            diff = big - small
            margin = diff / max(big, small, 1e-300)
            worst = min(worst, margin)
            if mode == "strict":
                if not (diff > 2.0 * noise and margin > 1e-10):
                    ok = False
            else:
                if diff < -(2.0 * noise + 1e-9 * max(big, small)):
                    ok = False
        rows.append(ArchCheck(k, z, left, right, spacing_ok, worst, ok))
    return ConvexityReport(mode, reversed, tuple(rows))


# --------------------------------------------------------------------------
# comparison theorems


@dataclass(frozen=True)
class ComparisonReport:
    first_root_v: float
    first_root_w: float
    dominance_ok: bool
    first_root_order_ok: bool
    interlacing_ok: bool
    min_dominance_gap: float
    v_roots: Tuple[float, ...]
    w_roots: Tuple[float, ...]

    @property
    def passed(self) -> bool:
        return self.dominance_ok and self.first_root_order_ok and self.interlacing_ok


def compare_solutions(phi: PhiSpec, psi: PhiSpec, shared_init: Tuple[float, float, float],
                      span: Tuple[float, float], n_check: int = 100,
                      rtol: float = 1e-10, atol: float = 1e-12) -> ComparisonReport:
    """Verify Sturm's comparison statements for v'' + phi v = 0 and
    w'' + psi w = 0 started from the same zero with equal positive slope,
    where phi < psi on the span.

    Raises
    ------
    PreconditionError
        If phi < psi fails at a sampled point, or the initial data is not a
        shared zero with positive slope.
    """
    a, u0, s = (float(x) for x in shared_init)
    if u0 != 0.0 or not s > 0.0:
        raise PreconditionError("shared_init must be (a, 0, s) with s > 0")
    for t in np.linspace(span[0], span[1], n_check + 1)[1:]:
        if not phi(t) < psi(t):
            raise PreconditionError(f"phi < psi violated at t={t:.6g}")
    v = solve_normal_form(phi, (a, 0.0, s), span, rtol=rtol, atol=atol)
    w = solve_normal_form(psi, (a, 0.0, s), span, rtol=rtol, atol=atol)
    if not v.detected_roots or not w.detected_roots:
        raise PreconditionError("span too short: v or w has no root")
    v1 = v.detected_roots[0]
    w1 = w.detected_roots[0]
    gaps = []
    for t in np.linspace(a, w1, 202)[1:-1]:
        gaps.append(v.u(t) - w.u(t))
    min_gap = min(gaps)
    dominance_ok = min_gap > 0.0
    order_ok = w1 < v1
    vr = [a] + list(v.detected_roots)
    interlace = True
    for lo, hi in zip(vr[:-1], vr[1:]):
        if not any(lo < r < hi for r in w.detected_roots):
            interlace = False
    return ComparisonReport(v1, w1, dominance_ok, order_ok, interlace, min_gap,
                            v.detected_roots, w.detected_roots)
