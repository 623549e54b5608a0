"""Hypothesis checks and positivity certificates for oscillatory transforms.

Each theorem id names a sufficient condition for the sign of a transform:

========  ==============================================================
M1        general kernel, phi strictly increasing, f decreasing
M3        general kernel, phi increasing, f strictly decreasing on support
T         Fourier sine transform
CT        Fourier cosine transform (f strictly decreasing and convex)
H1        Hankel transform, nu > 1/2
H2        Hankel transform, 0 < nu < 1/2, t^(3/2 - 3 nu) f decreasing
F         Hankel transform, nu > -1, through the order-raising g
Y         Y-transform, 1/2 < |nu| < 1 (negative for nu > 0)
========  ==============================================================

A certificate combines the hypothesis report with evaluations of the
transform on a grid of x values.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import transforms
from .errors import CapabilityError, ConvergenceError, DomainError, OscposError, PreconditionError
from .kernels import KernelSpec
from .profiles import Declarations, ProfileFunction
from .quadrature import integrate_from_zero, local_exponent
from .sturm import HOLDS, classify_oscillation
from .zeros import ZeroStream

THEOREMS = ("M1", "M3", "T", "CT", "H1", "H2", "F", "Y")
VERIFIED, DECLARED, VIOLATED = "verified_numerically", "declared", "violated"
VERDICTS = ("certified_positive", "certified_negative", "not_certified",
            "hypothesis_holds_but_numeric_violation")

N_SAMPLES = 500
SAMPLE_RANGE = (1e-4, 1e3)
SEED = 20240607


@dataclass(frozen=True)
class Hypothesis:
    name: str
    status: str
    evidence: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "evidence": self.evidence}


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    nu: Optional[float]
    case: Optional[str]
    hypotheses: Tuple[Hypothesis, ...]

    @property
    def violated(self) -> List[Hypothesis]:
        return [h for h in self.hypotheses if h.status == VIOLATED]

    @property
    def holds(self) -> bool:
        return not self.violated

    def status_of(self, name: str) -> str:
        for h in self.hypotheses:
            if h.name == name:
                return h.status
        raise KeyError(name)

    def as_list(self) -> list:
        return [h.as_dict() for h in self.hypotheses]


# --------------------------------------------------------------------------
# sampled property checks


def _samples(support: float, n: int = N_SAMPLES, seed: int = SEED, k: int = 2) -> np.ndarray:
    lo, hi = SAMPLE_RANGE
    hi = min(hi, support)
    rng = np.random.default_rng(seed)
    pts = np.exp(rng.uniform(math.log(lo), math.log(hi), size=(n, k)))
    pts.sort(axis=1)
    return pts


def _fmt(t: float) -> float:
    return float(f"{t:.6g}")


def check_nonnegative(name: str, h: Callable[[float], float], support: float = math.inf) -> Hypothesis:
    for t in _samples(support, k=1)[:, 0]:
        v = h(t)
        if v < 0.0:
            return Hypothesis(name, VIOLATED, {"t": _fmt(t), "value": v})
    return Hypothesis(name, VERIFIED, {"samples": N_SAMPLES})


def check_decreasing(name: str, h: Callable[[float], float], support: float = math.inf,
                     strict: bool = False) -> Hypothesis:
    """Pairs t1 < t2 sampled log-uniformly; pairs where h has underflowed
    to 0 at both ends lie outside the numerical support and are skipped."""
    for t1, t2 in _samples(support):
        a, b = h(t1), h(t2)
        if a == 0.0 and b == 0.0:
            continue
        slack = 1e-12 * max(abs(a), abs(b))
        bad = (not b < a) if strict else (b > a + slack)
        if bad and t2 > t1 * (1.0 + 1e-12):
            return Hypothesis(name, VIOLATED, {"t1": _fmt(t1), "t2": _fmt(t2), "h1": a, "h2": b})
    return Hypothesis(name, VERIFIED, {"pairs": N_SAMPLES})


def check_convex(name: str, h: Callable[[float], float], support: float = math.inf) -> Hypothesis:
    for t1, t2 in _samples(support):
        m = 0.5 * (t1 + t2)
        a, b, c = h(t1), h(m), h(t2)
        if b > 0.5 * (a + c) + 1e-12 * max(abs(a), abs(c)):
            return Hypothesis(name, VIOLATED, {"t1": _fmt(t1), "t2": _fmt(t2), "midpoint_excess": b - 0.5 * (a + c)})
    return Hypothesis(name, VERIFIED, {"triples": N_SAMPLES})


def check_not_vanishing(name: str, h: Callable[[float], float], support: float = math.inf) -> Hypothesis:
    hi = min(SAMPLE_RANGE[1], support)
    ts = np.geomspace(SAMPLE_RANGE[0], hi, 64)
    peak = max(abs(h(t)) for t in ts)
    if peak > 0.0:
        return Hypothesis(name, VERIFIED, {"max_abs_sampled": peak})
    return Hypothesis(name, VIOLATED, {"max_abs_sampled": 0.0})


def check_limit_zero(name: str, h: Callable[[float], float], declared: Optional[bool],
                     support: float = math.inf) -> Hypothesis:
    """h(T 2^i) for T = 1, i = 0..40 must fall below 1e-6 h(1) and stay there."""
    if math.isfinite(support):
        return Hypothesis(name, VERIFIED, {"support_upper": support})
    ref = abs(h(1.0))
    vals = [abs(h(2.0 ** i)) for i in range(41)]
    floor = 1e-6 * (ref if ref > 0.0 else max(vals))
    for i, v in enumerate(vals):
        if v <= floor and all(w <= floor for w in vals[i:]):
            return Hypothesis(name, VERIFIED, {"below_from_t": 2.0 ** i, "threshold": floor})
    tail = vals[-1]
    if declared:
        return Hypothesis(name, DECLARED, {"last_sample": tail, "t": 2.0 ** 40})
    # a decade of doublings must still shrink h visibly, which rules out
    # functions settling at a positive constant
    decaying = all(vals[i + 1] <= vals[i] * (1 + 1e-12) for i in range(30, 40)) and tail < 0.9 * vals[30]
    if declared is None and decaying:
        return Hypothesis(name, DECLARED, {"last_sample": tail, "note": "slow decay, not settled"})
    return Hypothesis(name, VIOLATED, {"last_sample": tail, "t": 2.0 ** 40})


def check_integrable_at_zero(name: str, h: Callable[[float], float], weight_exponent: float,
                             sigma: float, weight: Optional[Callable[[float], float]] = None) -> Hypothesis:
    """int_0^1 w(t) h(t) dt < infinity, with h(t) ~ c t^(-sigma) declared and
    w(t) ~ t^weight_exponent (w(t) = t^weight_exponent unless given).

    The local exponent of the integrand is also estimated from samples near
    0, independently of the declaration.
    """

    def integrand(t):
        w = weight(t) if weight is not None else t ** weight_exponent
        return w * h(t)

    q_decl = weight_exponent - sigma
    q_est = local_exponent(integrand, 1e-10)
    evidence = {"declared_exponent": q_decl}
    if q_est is not None:
        evidence["estimated_exponent"] = round(q_est, 6)
        if q_est <= -1.0 + 1e-6:
            return Hypothesis(name, VIOLATED, evidence)
    try:
        value = integrate_from_zero(integrand, 1.0, q_decl)
    except OscposError as exc:
        evidence["error"] = str(exc)
        return Hypothesis(name, VIOLATED, evidence)
    evidence["integral"] = value
    return Hypothesis(name, VERIFIED, evidence)


def _param(name: str, ok: bool, **evidence) -> Hypothesis:
    return Hypothesis(name, VERIFIED if ok else VIOLATED, evidence)


def _smooth(f: ProfileFunction) -> Hypothesis:
    if f.derivative is None:
        return Hypothesis("sectionally_smooth", VIOLATED, {"reason": "no derivative evaluator"})
    return Hypothesis("sectionally_smooth", DECLARED, {"breakpoints": list(f.declared.breakpoints)})


def _continuous(f: ProfileFunction) -> Hypothesis:
    return Hypothesis("sectionally_continuous", DECLARED, {"breakpoints": list(f.declared.breakpoints)})


# --------------------------------------------------------------------------
# g and the order reduction


def _sigma_g(nu: float, sigma: float) -> float:
    # g ~ (nu + 1/2 + sigma) t^(-sigma-1) near 0 unless that coefficient vanishes
    if abs(nu + 0.5 + sigma) > 1e-14:
        return sigma + 1.0
    return max(sigma - 1.0, 0.0)


def build_g(nu: float, f: ProfileFunction) -> ProfileFunction:
    """g(t) = (nu + 1/2) f(t)/t - f'(t) = -t^(nu+1/2) d/dt[t^(-nu-1/2) f(t)].

    Properties of g are left undeclared so that they get checked.
    """
    if f.derivative is None:
        raise CapabilityError(f"build_g needs a derivative of {f.name}")
    nu = float(nu)
    c = nu + 0.5
    fd, fdd = f.derivative, f.second_derivative
    support = f.support_upper

    def g(t):
        if t > support:
            return 0.0
        return c * f.evaluator(t) / t - fd(t)

    gd = None
    if fdd is not None:
        def gd(t):
            return c * (fd(t) / t - f.evaluator(t) / (t * t)) - fdd(t)

    return ProfileFunction(
        evaluator=g,
        derivative=gd,
        declared=Declarations(support_upper=support, breakpoints=f.declared.breakpoints),
        singular_exponent_at_zero=_sigma_g(nu, f.singular_exponent_at_zero),
        name=f"g[nu={nu:g}]({f.name})",
        working_range=f.working_range,
    )


@dataclass(frozen=True)
class OrderReduction:
    order: float
    g: ProfileFunction
    moment_lhs: float
    moment_rhs: float

    def __iter__(self):
        return iter((self.order, self.g))


def reduce_order(nu: float, f: ProfileFunction, rtol: float = 1e-8) -> OrderReduction:
    """Raise the Hankel order by one: (H_nu f)(x) = (1/x) (H_{nu+1} g)(x).

    Checks the boundary conditions t^(nu+3/2) f(t) -> 0 at 0+ and f -> 0 at
    infinity, and verifies

        int_0^1 t^(nu+3/2) g dt = -f(1) + (2 nu + 2) int_0^1 t^(nu+1/2) f dt

    by computing both sides.

    Raises
    ------
    PreconditionError
        A boundary condition fails.
    ConvergenceError
        The two sides disagree by more than ``rtol``.
    """
    nu = float(nu)
    sigma = f.singular_exponent_at_zero
    if not nu + 1.5 - sigma > 0.0:
        raise PreconditionError(f"t^(nu+3/2) f(t) does not vanish at 0+ (nu={nu:g}, sigma={sigma:g})")
    lim = check_limit_zero("f_limit_zero", f, f.declared.limit_zero_at_infinity, f.support_upper)
    if lim.status == VIOLATED:
        raise PreconditionError(f"{f.name} does not tend to zero at infinity")
    g = build_g(nu, f)
    lhs = integrate_from_zero(lambda t: t ** (nu + 1.5) * g(t), 1.0, nu + 1.5 - g.singular_exponent_at_zero)
    inner = integrate_from_zero(lambda t: t ** (nu + 0.5) * f(t), 1.0, nu + 0.5 - sigma)
    rhs = -f(1.0) + (2.0 * nu + 2.0) * inner
    scale = max(abs(lhs), abs(rhs), abs(f(1.0)), 1e-300)
    if abs(lhs - rhs) > rtol * scale and not (f.is_zero() and lhs == rhs == 0.0):
        raise ConvergenceError(f"order-reduction integral identity off by {abs(lhs - rhs):.3g}")
    return OrderReduction(nu + 1.0, g, lhs, rhs)


# --------------------------------------------------------------------------
# hypothesis lists


def _f_basics(f: ProfileFunction, decreasing: str = "decreasing") -> List[Hypothesis]:
    s = f.support_upper
    out = [check_nonnegative("f_nonnegative", f, s)]
    if decreasing == "strict":
        out.append(check_decreasing("f_strictly_decreasing_on_support", f, s, strict=True))
    elif decreasing == "decreasing":
        out.append(check_decreasing("f_decreasing", f, s))
    out.append(check_not_vanishing("f_not_vanishing", f, s))
    return out


def _f_limit(f: ProfileFunction) -> Hypothesis:
    return check_limit_zero("f_limit_zero_at_infinity", f, f.declared.limit_zero_at_infinity, f.support_upper)


def _kernel_hypotheses(kernel: KernelSpec, strict: bool) -> List[Hypothesis]:
    phi = kernel.normal_form_phi()
    out = []
    rng = np.random.default_rng(SEED)
    lo, hi = phi.working_range
    pairs = np.exp(rng.uniform(math.log(lo), math.log(hi), size=(200, 2)))
    pairs.sort(axis=1)
    name = "phi_strictly_increasing" if strict else "phi_increasing"
    ok, bad = True, None
    for t1, t2 in pairs:
        a, b = phi(t1), phi(t2)
        if (strict and not b > a) or (not strict and b < a - 1e-12 * max(abs(a), abs(b))):
            ok, bad = False, (_fmt(t1), _fmt(t2))
            break
    out.append(Hypothesis(name, VERIFIED if ok else VIOLATED,
                          {"declared": phi.declared_monotonicity, "counterexample": bad}))
    cls = classify_oscillation(phi)
    osc = HOLDS in (cls.a1, cls.a2, cls.a3)
    out.append(Hypothesis("oscillation_A1_A2_or_A3", VERIFIED if osc else VIOLATED,
                          {"a1": cls.a1, "a2": cls.a2, "a3": cls.a3}))
    vanish = kernel.vanishes_at_origin
    ev = {"origin_exponent": kernel.origin_exponent}
    if vanish:
        z1 = ZeroStream(kernel, 1e-12)[0]
        ts = np.linspace(z1 / 65.0, z1 * 64.0 / 65.0, 64)
        vanish = all(kernel(t) > 0.0 for t in ts)
        ev["first_zero"] = z1
    out.append(Hypothesis("u_vanishes_at_origin_and_positive_on_first_arch",
                          VERIFIED if vanish else VIOLATED, ev))
    return out


def _g_checks(nu_eff: float, f: ProfileFunction, case: str) -> List[Hypothesis]:
    try:
        g = build_g(nu_eff, f)
    except CapabilityError as exc:
        return [Hypothesis("g_available", VIOLATED, {"reason": str(exc)})]
    s = f.support_upper
    out = [check_not_vanishing("g_not_vanishing", g, s), check_nonnegative("g_nonnegative", g, s)]
    if case == "i":
        out.append(check_decreasing("g_decreasing", g, s))
        out.append(check_limit_zero("g_limit_zero_at_infinity", g, None, s))
    else:
        w = -1.5 - 3.0 * nu_eff
        out.append(check_decreasing(f"t^({w:g}) g decreasing", lambda t: t ** w * g(t), s))
    return out


def f_case(nu: float) -> str:
    if abs(nu + 0.5) < 1e-12:
        return "ii"
    return "i" if nu > -0.5 else "iii"


def check_hypotheses(theorem: str, f: ProfileFunction, nu: Optional[float] = None,
                     kernel: Optional[KernelSpec] = None, alpha: Optional[float] = None) -> HypothesisReport:
    """Evaluate every hypothesis of ``theorem`` for the profile ``f``.

    Raises
    ------
    DomainError
        Unknown theorem id, or a required parameter (nu, kernel) is missing.
    """
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}", theorem)
    if theorem in ("H1", "H2", "F", "Y") and nu is None:
        raise DomainError(f"theorem {theorem} needs nu")
    if theorem in ("M1", "M3") and kernel is None:
        raise DomainError(f"theorem {theorem} needs a kernel")
    nu = None if nu is None else float(nu)
    hyps: List[Hypothesis] = []
    case = None

    if theorem in ("M1", "M3"):
        hyps += _kernel_hypotheses(kernel, strict=(theorem == "M1"))
        hyps += _f_basics(f, "decreasing" if theorem == "M1" else "strict")
        hyps.append(_continuous(f))
        hyps.append(check_integrable_at_zero("integrable_at_zero", f, kernel.origin_exponent,
                                             f.singular_exponent_at_zero, weight=lambda t: abs(kernel(t))))
        vanish = _f_limit(f)
        hyps.append(Hypothesis("arch_integrals_vanish", vanish.status,
                               dict(vanish.evidence, via="f -> 0; also monitored during evaluation")))
    elif theorem == "T":
        hyps += _f_basics(f, "strict")
        hyps.append(_continuous(f))
        hyps.append(check_integrable_at_zero("integral_0_1_t_f_finite", f, 1.0, f.singular_exponent_at_zero))
        hyps.append(_f_limit(f))
    elif theorem == "CT":
        hyps += _f_basics(f, "strict")
        hyps.append(check_convex("f_convex", f, f.support_upper))
        hyps.append(_smooth(f))
        hyps.append(check_integrable_at_zero("integral_0_1_f_finite", f, 0.0, f.singular_exponent_at_zero))
        hyps.append(_f_limit(f))
    elif theorem == "H1":
        hyps.append(_param("nu_above_one_half", nu > 0.5, nu=nu))
        hyps += _f_basics(f)
        hyps.append(_continuous(f))
        hyps.append(check_integrable_at_zero("integral_0_1_t^(nu+1/2)_f_finite", f, nu + 0.5,
                                             f.singular_exponent_at_zero))
        hyps.append(_f_limit(f))
    elif theorem == "H2":
        hyps.append(_param("nu_in_0_one_half", 0.0 < nu < 0.5, nu=nu))
        hyps += _f_basics(f, decreasing="none")
        hyps.append(_continuous(f))
        w = 1.5 - 3.0 * nu
        hyps.append(check_decreasing(f"t^({w:g}) f decreasing", lambda t: t ** w * f(t), f.support_upper))
        hyps.append(check_integrable_at_zero("integral_0_1_t^(nu+1/2)_f_finite", f, nu + 0.5,
                                             f.singular_exponent_at_zero))
    elif theorem == "F":
        case = f_case(nu)
        hyps.append(_param("nu_above_minus_one", nu > -1.0, nu=nu))
        hyps += _f_basics(f)
        hyps.append(_smooth(f))
        hyps.append(check_integrable_at_zero("integral_0_1_t^(nu+1/2)_f_finite", f, nu + 0.5,
                                             f.singular_exponent_at_zero))
        hyps.append(_f_limit(f))
        if case == "ii":
            s = f.support_upper
            hyps.append(check_decreasing("f_strictly_decreasing_on_support", f, s, strict=True))
            hyps.append(check_convex("f_convex", f, s))
            hyps.append(check_not_vanishing("g_not_vanishing", build_g(nu, f), s)
                        if f.derivative is not None else Hypothesis("g_available", VIOLATED, {}))
        else:
            hyps += _g_checks(nu, f, case)
    elif theorem == "Y":
        a = abs(nu)
        hyps.append(_param("abs_nu_in_one_half_one", 0.5 < a < 1.0, nu=nu))
        hyps += _f_basics(f)
        hyps.append(_continuous(f))
        hyps.append(check_integrable_at_zero("integral_0_1_t^(1/2-|nu|)_f_finite", f, 0.5 - a,
                                             f.singular_exponent_at_zero))
        hyps.append(_f_limit(f))
        hyps += _g_checks(-a, f, "iii")
    return HypothesisReport(theorem, nu, case, tuple(hyps))


# --------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class PositivityCertificate:
    theorem: str
    nu: Optional[float]
    alpha: Optional[float]
    case: Optional[str]
    profile: str
    hypotheses: HypothesisReport
    grid: Tuple[float, ...]
    values: Tuple[float, ...]
    tail_bounds: Tuple[float, ...]
    expected_sign: int
    min_value: float
    verdict: str
    cause: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "case": self.case,
            "nu": self.nu,
            "alpha": self.alpha,
            "profile": self.profile,
            "expected_sign": self.expected_sign,
            "hypotheses": self.hypotheses.as_list(),
            "grid": list(self.grid),
            "values": list(self.values),
            "tail_bounds": list(self.tail_bounds),
            "min_value": self.min_value,
            "verdict": self.verdict,
            "cause": self.cause,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @property
    def expected_verdict(self) -> str:
        return "certified_positive" if self.expected_sign > 0 else "certified_negative"


def worker_count(n_tasks: int) -> int:
    """Thread count for grid evaluation, capped by the OSC_THREADS variable."""
    cap = os.environ.get("OSC_THREADS")
    limit = os.cpu_count() or 1
    if cap:
        try:
            limit = max(1, int(cap))
        except ValueError:
            raise DomainError(f"OSC_THREADS must be an integer, got {cap!r}", cap) from None
    return max(1, min(limit, n_tasks))


def ordered_map(fn, items: Sequence) -> list:
    """``[fn(i) for i in items]`` on a thread pool; results in input order."""
    workers = worker_count(len(items))
    if workers == 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def evaluator_for(theorem: str, nu: Optional[float] = None, kernel: Optional[KernelSpec] = None,
                  alpha: Optional[float] = None) -> Callable[[ProfileFunction, float, float], Tuple[float, float]]:
    """The transform whose sign ``theorem`` predicts, as (f, x, tol) -> (value, bound)."""
    if theorem in ("M1", "M3"):
        return lambda f, x, tol: transforms.transform_eval(kernel, f, x, tol)[:2]
    if theorem == "T":
        return lambda f, x, tol: transforms.transform_eval(KernelSpec.sine(), f, x, tol)[:2]
    if theorem == "CT":
        return transforms.fourier_cosine_eval
    if theorem in ("H1", "H2", "F"):
        return lambda f, x, tol: transforms.hankel_eval(nu, f, x, tol)
    if theorem == "Y":
        return lambda f, x, tol: transforms.y_transform_eval(nu, f, x, tol)
    raise DomainError(f"unknown theorem {theorem!r}", theorem)


def certify(theorem: str, f: ProfileFunction, grid: Sequence[float], nu: Optional[float] = None,
            kernel: Optional[KernelSpec] = None, alpha: Optional[float] = None,
            tol: float = 1e-10) -> PositivityCertificate:
    """Check the hypotheses of ``theorem`` and corroborate its sign on ``grid``.

    The sign counts as corroborated at x only when |value| exceeds the
    evaluation's error estimate; otherwise the point is re-evaluated with a
    tighter tolerance once.  A wrong sign beyond the error estimate with all
    hypotheses holding gives ``hypothesis_holds_but_numeric_violation``.
    """
    grid = tuple(float(x) for x in grid)
    if not grid or not all(math.isfinite(x) and x > 0.0 for x in grid):
        raise DomainError("grid must be a non-empty list of finite positive numbers")
    if theorem == "M1" or theorem == "M3":
        if kernel is None:
            raise DomainError(f"theorem {theorem} needs a kernel")
    report = check_hypotheses(theorem, f, nu=nu, kernel=kernel, alpha=alpha)
    sign = -1 if (theorem == "Y" and nu is not None and nu > 0.0) else 1
    base = dict(theorem=theorem, nu=None if nu is None else float(nu), alpha=alpha, case=report.case,
                profile=f.name, hypotheses=report, grid=grid, expected_sign=sign)

    if not report.holds:
        names = ", ".join(h.name for h in report.violated)
        return PositivityCertificate(values=(), tail_bounds=(), min_value=math.nan,
                                     verdict="not_certified", cause=f"hypotheses violated: {names}", **base)

    evaluate = evaluator_for(theorem, nu, kernel, alpha)

    def one(x):
        value, bound = evaluate(f, x, tol)
        if abs(value) <= bound:
            value, bound = evaluate(f, x, max(tol * 1e-3, 1e-13))
        return value, bound

    try:
        results = ordered_map(one, grid)
    except OscposError as exc:
        return PositivityCertificate(values=(), tail_bounds=(), min_value=math.nan,
                                     verdict="not_certified", cause=f"{type(exc).__name__}: {exc}", **base)

    values = tuple(float(v) for v, _ in results)
    bounds = tuple(float(b) for _, b in results)
    signed = [sign * v for v in values]
    if all(s > b for s, b in zip(signed, bounds)):
        verdict, cause = ("certified_positive" if sign > 0 else "certified_negative"), None
    elif any(s < -b for s, b in zip(signed, bounds)):
        bad = [x for x, s, b in zip(grid, signed, bounds) if s < -b]
        verdict, cause = "hypothesis_holds_but_numeric_violation", f"wrong sign at x = {bad}"
    else:
        verdict, cause = "not_certified", "a value is within its error estimate of zero"
    return PositivityCertificate(values=values, tail_bounds=bounds, min_value=min(signed),
                                 verdict=verdict, cause=cause, **base)
