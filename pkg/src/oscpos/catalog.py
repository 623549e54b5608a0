"""Built-in parametric profile families with analytically derived declarations."""

from __future__ import annotations

import math
from typing import Callable, Dict, Mapping

from .errors import DomainError
from .profiles import Declarations, ProfileFunction, zero_profile


def _need(cond: bool, msg: str, value=None) -> None:
    if not cond:
        raise DomainError(msg, value)


def exp_decay(b: float = 1.0) -> ProfileFunction:
    """f(t) = exp(-b t), b > 0."""
    b = float(b)
    _need(b > 0.0, f"exp_decay needs b > 0, got {b!r}", b)
    return ProfileFunction(
        evaluator=lambda t: math.exp(-b * t),
        derivative=lambda t: -b * math.exp(-b * t),
        second_derivative=lambda t: b * b * math.exp(-b * t),
        declared=Declarations(True, True, True, True, math.inf, True, True),
        singular_exponent_at_zero=0.0,
        name=f"exp_decay(b={b:g})",
    )


def power(beta: float) -> ProfileFunction:
    """f(t) = t^(-beta), beta > 0."""
    beta = float(beta)
    _need(beta > 0.0, f"power needs beta > 0, got {beta!r}", beta)
    return ProfileFunction(
        evaluator=lambda t: t ** -beta,
        derivative=lambda t: -beta * t ** (-beta - 1.0),
        second_derivative=lambda t: beta * (beta + 1.0) * t ** (-beta - 2.0),
        declared=Declarations(True, True, True, True, math.inf, True, True),
        singular_exponent_at_zero=beta,
        name=f"power(beta={beta:g})",
    )


def rational(gamma: float, delta: float, a: float = 1.0) -> ProfileFunction:
    """f(t) = 1 / (t^gamma (t^2 + a^2)^delta) with gamma >= 0, delta >= 0,
    gamma + delta > 0, a > 0.  Convexity is left undeclared."""
    g, d, a = float(gamma), float(delta), float(a)
    _need(g >= 0.0 and d >= 0.0 and g + d > 0.0,
          f"rational needs gamma, delta >= 0 not both zero (gamma={g!r}, delta={d!r})", g)
    _need(a > 0.0, f"rational needs a > 0, got {a!r}", a)
    a2 = a * a

    def f(t):
        return t ** -g * (t * t + a2) ** -d

    def log_slope(t):
        return -g / t - 2.0 * d * t / (t * t + a2)

    def fp(t):
        return f(t) * log_slope(t)

    def fpp(t):
        s = t * t + a2
        return f(t) * (log_slope(t) ** 2 + g / (t * t) - 2.0 * d * (a2 - t * t) / (s * s))

    return ProfileFunction(
        evaluator=f,
        derivative=fp,
        second_derivative=fpp,
        declared=Declarations(True, True, True, None, math.inf, True, True),
        singular_exponent_at_zero=g,
        name=f"rational(gamma={g:g},delta={d:g},a={a:g})",
    )


def shifted_power(a: float = 1.0, lam: float = 1.0) -> ProfileFunction:
    """f(t) = (t + a)^(-lambda), a > 0, lambda > 0."""
    a, lam = float(a), float(lam)
    _need(a > 0.0, f"shifted_power needs a > 0, got {a!r}", a)
    _need(lam > 0.0, f"shifted_power needs lambda > 0, got {lam!r}", lam)
    return ProfileFunction(
        evaluator=lambda t: (t + a) ** -lam,
        derivative=lambda t: -lam * (t + a) ** (-lam - 1.0),
        second_derivative=lambda t: lam * (lam + 1.0) * (t + a) ** (-lam - 2.0),
        declared=Declarations(True, True, True, True, math.inf, True, True),
        singular_exponent_at_zero=0.0,
        name=f"shifted_power(a={a:g},lambda={lam:g})",
    )


def power_exp(beta: float, b: float = 1.0) -> ProfileFunction:
    """f(t) = t^(-beta) exp(-b t), beta >= 0, b > 0 (a product of positive,
    decreasing, convex factors, hence decreasing and convex)."""
    beta, b = float(beta), float(b)
    _need(beta >= 0.0, f"power_exp needs beta >= 0, got {beta!r}", beta)
    _need(b > 0.0, f"power_exp needs b > 0, got {b!r}", b)

    def f(t):
        return t ** -beta * math.exp(-b * t)

    def fp(t):
        return -f(t) * (beta / t + b)

    def fpp(t):
        return f(t) * ((beta / t + b) ** 2 + beta / (t * t))

    return ProfileFunction(
        evaluator=f,
        derivative=fp,
        second_derivative=fpp,
        declared=Declarations(True, True, True, True, math.inf, True, True),
        singular_exponent_at_zero=beta,
        name=f"power_exp(beta={beta:g},b={b:g})",
    )


def abs_sin_exp(b: float = 1.0) -> ProfileFunction:
    """f(t) = |sin t| exp(-b t): nonnegative but not monotone (a control)."""
    b = float(b)
    _need(b > 0.0, f"abs_sin_exp needs b > 0, got {b!r}", b)
    return ProfileFunction(
        evaluator=lambda t: abs(math.sin(t)) * math.exp(-b * t),
        declared=Declarations(nonnegative=True, limit_zero_at_infinity=True,
                              breakpoints=tuple(k * math.pi for k in range(1, 64))),
        singular_exponent_at_zero=-1.0,
        name=f"abs_sin_exp(b={b:g})",
    )


FAMILIES: Dict[str, Callable[..., ProfileFunction]] = {
    "exp_decay": exp_decay,
    "power": power,
    "rational": rational,
    "shifted_power": shifted_power,
    "power_exp": power_exp,
    "abs_sin_exp": abs_sin_exp,
    "zero": zero_profile,
}

# CLI parameter names -> keyword arguments
_ALIASES = {"lambda": "lam", "λ": "lam", "β": "beta", "γ": "gamma", "δ": "delta"}


def make_profile(family: str, params: Mapping[str, float] = None) -> ProfileFunction:
    """Build a catalog profile by family name and parameter mapping."""
    if family not in FAMILIES:
        raise DomainError(f"unknown function family {family!r}; choose from {', '.join(sorted(FAMILIES))}",
                          family)
    kwargs = {_ALIASES.get(k, k): float(v) for k, v in (params or {}).items()}
    try:
        return FAMILIES[family](**kwargs)
    except TypeError as exc:
        raise DomainError(f"bad parameters for {family}: {exc}", family) from None
