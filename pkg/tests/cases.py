"""Shared catalogs of test cases: (kernel, profile, x) triples and
certification entries."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from oscpos import catalog
from oscpos.kernels import KernelSpec
from oscpos.sturm import phi_constant


@dataclass(frozen=True)
class Triple:
    label: str
    transform: str          # name understood by transforms.evaluate, or "ode"
    family: str
    params: Tuple[Tuple[str, float], ...]
    x: float
    nu: Optional[float] = None
    alpha: Optional[float] = None

    def profile(self):
        return catalog.make_profile(self.family, dict(self.params))

    def kernel(self) -> KernelSpec:
        t = self.transform
        if t == "sine":
            return KernelSpec.sine()
        if t == "cosine":
            return KernelSpec.cosine()
        if t == "hankel":
            return KernelSpec.bessel_sqrt(self.nu)
        if t == "scaled":
            return KernelSpec.scaled_bessel(self.nu, self.alpha)
        if t == "y":
            return KernelSpec.neumann_sqrt(self.nu)
        if t == "ode":
            return KernelSpec.ode(phi_constant(4.0))
        raise ValueError(t)


def _t(label, transform, family, x, nu=None, alpha=None, **params):
    return Triple(label, transform, family, tuple(sorted(params.items())), x, nu, alpha)


# Kernels with increasing phi and decreasing profiles: the arch integrals
# form a decreasing alternating series.
ALTERNATING = (
    _t("sine/exp", "sine", "exp_decay", 1.0, b=1.0),
    _t("sine/rational", "sine", "rational", 0.5, gamma=1.0, delta=1.0, a=1.0),
    _t("sine/power", "sine", "power", 2.0, beta=0.5),
    _t("sine/shifted", "sine", "shifted_power", 1.0, a=1.0, lam=1.0),
    _t("sine/shifted3", "sine", "shifted_power", 1.0, a=1.0, lam=3.0),
    _t("sine/power_exp", "sine", "power_exp", 3.0, beta=0.5, b=1.0),
    _t("hankel1/power", "hankel", "power", 2.0, nu=1.0, beta=0.5),
    _t("hankel1/exp", "hankel", "exp_decay", 1.0, nu=1.0, b=1.0),
    _t("hankel2/gegenbauer", "hankel", "power_exp", 0.5, nu=2.0, beta=1.5, b=1.0),
    _t("hankel0.75/rational", "hankel", "rational", 1.0, nu=0.75, gamma=0.0, delta=1.0, a=1.0),
    _t("hankel5/exp", "hankel", "exp_decay", 2.0, nu=5.0, b=0.5),
    _t("hankel1.5/rational", "hankel", "rational", 1.0, nu=1.5, gamma=0.5, delta=0.5, a=1.0),
    _t("scaled0.25,2/exp", "scaled", "exp_decay", 1.0, nu=0.25, alpha=2.0, b=1.0),
    _t("scaled0.5,1.5/power_exp", "scaled", "power_exp", 1.0, nu=0.5, alpha=1.5, beta=0.5, b=1.0),
    _t("ode(4)/exp", "ode", "exp_decay", 1.0, b=1.0),
)

# Profiles decaying too slowly for plain quadrature on a growing range to
# settle (t^-1/2, (1+t)^-1, t^-2 tails); the oracle raises DivergenceError.
SLOW_TAIL = ("sine/power", "sine/shifted", "hankel1/power", "hankel0.75/rational")

# Oracle agreement additionally covers the kernels that are not
# arch-decomposed directly.
ORACLE = tuple(t for t in ALTERNATING if t.label not in SLOW_TAIL) + (
    _t("cosine/shifted2", "cosine", "shifted_power", 1.0, a=1.0, lam=2.0),
    _t("cosine/exp", "cosine", "exp_decay", 0.5, b=1.0),
    _t("y0.75/power_exp", "y", "power_exp", 1.0, nu=0.75, beta=0.5, b=1.0),
    _t("y-0.75/power_exp", "y", "power_exp", 2.0, nu=-0.75, beta=0.25, b=1.0),
    _t("hankel0/exp", "hankel", "exp_decay", 1.0, nu=0.0, b=1.0),
)


@dataclass(frozen=True)
class CertEntry:
    theorem: str
    family: str
    params: Tuple[Tuple[str, float], ...]
    nu: Optional[float] = None
    kernel: Optional[str] = None
    alpha: Optional[float] = None
    expect: str = "certified_positive"

    @property
    def label(self) -> str:
        p = ",".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.theorem}[nu={self.nu}] {self.family}({p})"

    def profile(self):
        return catalog.make_profile(self.family, dict(self.params))

    def kernel_spec(self) -> Optional[KernelSpec]:
        if self.kernel is None:
            return None
        if self.kernel == "sine":
            return KernelSpec.sine()
        if self.kernel == "hankel":
            return KernelSpec.bessel_sqrt(self.nu)
        return KernelSpec.scaled_bessel(self.nu, self.alpha)


def _c(theorem, family, expect="certified_positive", nu=None, kernel=None, alpha=None, **params):
    return CertEntry(theorem, family, tuple(sorted(params.items())), nu, kernel, alpha, expect)


CERT_GRID = (0.1, 0.5, 1.0, 2.0, 5.0, 20.0)

# expect: the verdict the theorem predicts, or not_certified when a
# hypothesis of that theorem fails for the profile.
CERTIFICATIONS = (
    _c("M1", "exp_decay", "not_certified", kernel="sine", b=1.0),  # phi constant, not strictly increasing
    _c("M1", "exp_decay", kernel="hankel", nu=2.0, b=1.0),
    _c("M1", "exp_decay", kernel="scaled", nu=0.25, alpha=4.0, b=1.0),
    _c("M3", "shifted_power", kernel="sine", a=1.0, lam=1.0),
    _c("M3", "power_exp", kernel="hankel", nu=1.0, beta=0.5, b=1.0),
    _c("T", "rational", gamma=1.0, delta=1.0, a=1.0),
    _c("T", "power", beta=0.5),
    _c("T", "exp_decay", b=2.0),
    _c("T", "abs_sin_exp", "not_certified", b=1.0),
    _c("CT", "exp_decay", b=1.0),
    _c("CT", "shifted_power", a=1.0, lam=2.0),
    _c("CT", "power_exp", beta=0.5, b=1.0),
    _c("H1", "rational", nu=1.0, gamma=0.0, delta=1.0, a=1.0),
    _c("H1", "exp_decay", nu=1.0, b=1.0),
    _c("H1", "power", nu=2.0, beta=1.5),
    _c("H1", "power", "not_certified", nu=1.0, beta=3.0),
    _c("H1", "exp_decay", "not_certified", nu=0.25, b=1.0),
    _c("H2", "power_exp", nu=0.25, beta=1.5, b=1.0),
    _c("H2", "exp_decay", "not_certified", nu=0.25, b=1.0),
    _c("F", "exp_decay", nu=0.0, b=1.0),
    _c("F", "power", nu=1.0, beta=1.0),
    _c("F", "exp_decay", nu=-0.5, b=1.0),
    _c("F", "shifted_power", nu=-0.5, a=1.0, lam=2.0),
    _c("F", "power", nu=-0.75, beta=0.5),
    _c("F", "exp_decay", "not_certified", nu=-0.75, b=1.0),
    _c("Y", "power_exp", "certified_negative", nu=0.75, beta=0.5, b=1.0),
    _c("Y", "power_exp", "certified_positive", nu=-0.75, beta=0.5, b=1.0),
    _c("Y", "power", "certified_negative", nu=0.9, beta=0.5),
    _c("Y", "power_exp", "not_certified", nu=0.75, beta=0.25, b=1.0),
)


def certify_entry(entry: CertEntry, grid=CERT_GRID, tol: float = 1e-10):
    from oscpos import positivity

    return positivity.certify(entry.theorem, entry.profile(), grid, nu=entry.nu,
                              kernel=entry.kernel_spec(), alpha=entry.alpha, tol=tol)


def is_close(a: float, b: float, rel: float) -> bool:
    return abs(a - b) <= rel * max(abs(b), 1e-300)


__all__ = ["Triple", "ALTERNATING", "ORACLE", "SLOW_TAIL", "CertEntry", "CERTIFICATIONS", "CERT_GRID",
           "certify_entry", "is_close", "math"]
