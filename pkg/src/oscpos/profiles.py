"""Profile functions f(t) >= 0 whose transforms are evaluated and certified."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Tuple

import numpy as np

from .errors import CapabilityError


@dataclass(frozen=True)
class Declarations:
    """Analytic properties asserted by whoever built the profile.

    ``None`` means "not declared"; such properties are checked numerically.
    """

    nonnegative: Optional[bool] = None
    decreasing: Optional[bool] = None
    strictly_decreasing_on_support: Optional[bool] = None
    convex: Optional[bool] = None
    support_upper: float = math.inf
    limit_zero_at_infinity: Optional[bool] = None
    sectionally_smooth: Optional[bool] = None
    breakpoints: Tuple[float, ...] = ()


@dataclass(frozen=True)
class ProfileFunction:
    """f(t) for t > 0, optionally with f' and f''.

    ``singular_exponent_at_zero`` is sigma in f(t) ~ c t**(-sigma) as t -> 0+
    (0 for profiles bounded at the origin).
    """

    evaluator: Callable[[float], float]
    derivative: Optional[Callable[[float], float]] = None
    second_derivative: Optional[Callable[[float], float]] = None
    declared: Declarations = field(default_factory=Declarations)
    singular_exponent_at_zero: float = 0.0
    name: str = "f"
    working_range: Tuple[float, float] = (1e-4, 1e3)

    def __call__(self, t: float) -> float:
        if t > self.declared.support_upper:
            return 0.0
        return self.evaluator(t)

    @property
    def support_upper(self) -> float:
        return self.declared.support_upper

    def is_zero(self) -> bool:
        return self.name == "zero"

    def negated_derivative(self) -> "ProfileFunction":
        """The profile -f'(t), used by the cosine integration-by-parts route."""
        if self.derivative is None:
            raise CapabilityError(f"profile {self.name} has no derivative evaluator")
        d, dd = self.derivative, self.second_derivative
        dec = self.declared
        sigma = self.singular_exponent_at_zero
        return ProfileFunction(
            evaluator=lambda t: -d(t),
            derivative=(lambda t: -dd(t)) if dd is not None else None,
            declared=Declarations(
                nonnegative=True if dec.decreasing else None,
                decreasing=True if dec.convex else None,
                support_upper=dec.support_upper,
                limit_zero_at_infinity=None,
                breakpoints=dec.breakpoints,
            ),
            singular_exponent_at_zero=sigma + 1.0 if sigma > 0.0 else 0.0,
            name=f"-d/dt {self.name}",
            working_range=self.working_range,
        )

    def with_support(self, upper: float) -> "ProfileFunction":
        return replace(self, declared=replace(self.declared, support_upper=float(upper)))

    def spot_check(self, n: int = 200, seed: int = 0) -> List[str]:
        """Sample points, pairs and midpoint triples; report contradicted declarations."""
        dec = self.declared
        lo, hi = self.working_range
        hi = min(hi, dec.support_upper)
        rng = np.random.default_rng(seed)
        pts = np.exp(rng.uniform(math.log(lo), math.log(hi), size=(n, 2)))
        pts.sort(axis=1)
        problems: List[str] = []
        for t1, t2 in pts:
            a, b = self(t1), self(t2)
            if dec.nonnegative and a < 0.0:
                problems.append(f"nonnegative: f({t1:.6g}) = {a:.6g}")
            slack = 1e-12 * max(abs(a), abs(b))
            if dec.decreasing and b > a + slack:
                problems.append(f"decreasing: f({t2:.6g}) > f({t1:.6g})")
            # both values underflowed: outside the numerical support
            underflow = a == 0.0 and b == 0.0
            if dec.strictly_decreasing_on_support and not b < a and t2 > t1 and not underflow:
                problems.append(f"strictly decreasing: f({t2:.6g}) >= f({t1:.6g})")
            if dec.convex:
                m = 0.5 * (t1 + t2)
                fm = self(m)
                if fm > 0.5 * (a + b) + slack:
                    problems.append(f"convex: midpoint test fails on [{t1:.6g}, {t2:.6g}]")
        return problems


def zero_profile() -> ProfileFunction:
    """f = 0 identically (a control: every transform vanishes)."""
    return ProfileFunction(
        evaluator=lambda t: 0.0,
        derivative=lambda t: 0.0,
        second_derivative=lambda t: 0.0,
        declared=Declarations(True, True, False, True, math.inf, True, True),
        singular_exponent_at_zero=0.0,
        name="zero",
    )
