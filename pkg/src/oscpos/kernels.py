"""Kernels u(t) of the transform (Uf)(x) = int_0^inf f(t) u(xt) dt."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Optional, Tuple

from . import special
from .errors import DomainError
from .sturm import PhiSpec, Trajectory, phi_bessel, phi_constant, phi_scaled_bessel, solve_normal_form

VARIANTS = ("sine", "cosine", "bessel_sqrt", "scaled_bessel", "neumann_sqrt", "ode")


@dataclass(frozen=True)
class KernelSpec:
    """A kernel variant plus its parameters.

    Build instances with the class methods (``KernelSpec.sine()``,
    ``KernelSpec.bessel_sqrt(nu)``, ...), which validate parameters.
    """

    variant: str
    nu: Optional[float] = None
    alpha: Optional[float] = None
    phi: Optional[PhiSpec] = None
    init: Optional[Tuple[float, float, float]] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, compare=False, repr=False, hash=False)

    # ---- constructors -------------------------------------------------
    @classmethod
    def sine(cls) -> "KernelSpec":
        return cls("sine")

    @classmethod
    def cosine(cls) -> "KernelSpec":
        return cls("cosine")

    @classmethod
    def bessel_sqrt(cls, nu: float) -> "KernelSpec":
        nu = float(nu)
        if not nu > -1.0:
            raise DomainError(f"bessel_sqrt kernel needs nu > -1, got {nu!r}", nu)
        return cls("bessel_sqrt", nu=nu)

    @classmethod
    def scaled_bessel(cls, nu: float, alpha: float) -> "KernelSpec":
        nu, alpha = float(nu), float(alpha)
        if not alpha > 1.0:
            raise DomainError(f"scaled_bessel kernel needs alpha > 1, got {alpha!r}", alpha)
        if not (alpha * nu >= 0.5 or (nu > 0.0 and alpha * nu + 0.5 > 0.0)):
            raise DomainError(f"scaled_bessel kernel needs alpha*nu >= 1/2 or nu > 0 (nu={nu!r})", nu)
        return cls("scaled_bessel", nu=nu, alpha=alpha)

    @classmethod
    def neumann_sqrt(cls, nu: float) -> "KernelSpec":
        nu = float(nu)
        if not 0.5 < abs(nu) < 1.0:
            raise DomainError(f"neumann_sqrt kernel needs 1/2 < |nu| < 1, got {nu!r}", nu)
        return cls("neumann_sqrt", nu=nu)

    @classmethod
    def ode(cls, phi: PhiSpec, init: Tuple[float, float, float] = (0.0, 0.0, 1.0)) -> "KernelSpec":
        init = tuple(float(v) for v in init)
        if init[0] != 0.0:
            raise DomainError("ode kernels must start at t0 = 0", init[0])
        return cls("ode", phi=phi, init=init)

    # ---- description --------------------------------------------------
    @property
    def label(self) -> str:
        if self.variant in ("bessel_sqrt", "neumann_sqrt"):
            return f"{self.variant}(nu={self.nu:g})"
        if self.variant == "scaled_bessel":
            return f"scaled_bessel(nu={self.nu:g},alpha={self.alpha:g})"
        if self.variant == "ode":
            return f"ode({self.phi.name})"
        return self.variant

    @property
    def origin_exponent(self) -> float:
        """p with u(t) ~ c t**p as t -> 0+."""
        v = self.variant
        if v == "sine":
            return 1.0
        if v == "cosine":
            return 0.0
        if v == "bessel_sqrt":
            return self.nu + 0.5
        if v == "scaled_bessel":
            return self.alpha * self.nu + 0.5
        if v == "neumann_sqrt":
            return 0.5 - abs(self.nu)
        return 1.0 if self.init[1] == 0.0 else 0.0

    @property
    def vanishes_at_origin(self) -> bool:
        return self.variant != "neumann_sqrt" and self.origin_exponent > 0.0

    def normal_form_phi(self) -> PhiSpec:
        v = self.variant
        if v in ("sine", "cosine"):
            return phi_constant(1.0)
        if v in ("bessel_sqrt", "neumann_sqrt"):
            return phi_bessel(self.nu)
        if v == "scaled_bessel":
            return phi_scaled_bessel(self.nu, self.alpha)
        return self.phi

    # ---- evaluation ---------------------------------------------------
    def trajectory(self, t_max: float) -> Trajectory:
        """Trajectory of an ODE kernel covering [0, t_max] (cached, grown by doubling)."""
        if self.variant != "ode":
            raise DomainError("only ode kernels have an integrated trajectory")
        with self._lock:
            traj = self._cache.get("traj")
            if traj is None or traj.span[1] < t_max:
                end = max(t_max, 2.0 * traj.span[1] if traj else 64.0)
                traj = solve_normal_form(self.phi, self.init, (0.0, end))
                self._cache["traj"] = traj
            return traj

    def __call__(self, t: float) -> float:
        v = self.variant
        if v == "sine":
            return math.sin(t)
        if v == "cosine":
            return math.cos(t)
        if t <= 0.0:
            if t == 0.0 and self.vanishes_at_origin:
                return 0.0
            if t == 0.0 and v == "ode":
                return self.init[1]
            raise DomainError(f"kernel {self.label} is not defined at t={t!r}", t)
        if v == "bessel_sqrt":
            return math.sqrt(t) * special.jv(self.nu, t)
        if v == "scaled_bessel":
            return math.sqrt(t) * special.jv(self.nu, t ** self.alpha)
        if v == "neumann_sqrt":
            return math.sqrt(t) * special.yv(self.nu, t)
        return self.trajectory(t).u(t)

    def derivative(self, t: float) -> float:
        v = self.variant
        if v == "sine":
            return math.cos(t)
        if v == "cosine":
            return -math.sin(t)
        if v == "bessel_sqrt":
            return 0.5 / math.sqrt(t) * special.jv(self.nu, t) + math.sqrt(t) * special.jv_prime(self.nu, t)
        if v == "scaled_bessel":
            s = t ** self.alpha
            return (0.5 / math.sqrt(t) * special.jv(self.nu, s)
                    + math.sqrt(t) * special.jv_prime(self.nu, s) * self.alpha * s / t)
        if v == "neumann_sqrt":
            nu = self.nu
            y = special.yv(nu, t)
            dy = nu / t * y - special.yv(nu + 1.0, t)
            return 0.5 / math.sqrt(t) * y + math.sqrt(t) * dy
        return self.trajectory(t).du(t)
