"""Gamma and Bessel functions of real order and real argument.

Everything here is pure Python on top of :mod:`math`.  The Bessel routines
return :class:`EvalResult` so callers can see which branch was used and how
large the rounding/truncation error is believed to be; the ``jv``/``yv``
helpers return bare floats for use inside quadrature loops.

Branches for J_nu(t):

* ``series``     power series, used for ``t <= SERIES_CROSSOVER``
* ``asymptotic`` Hankel's expansion, used above the crossover whenever the
  expansion reaches double precision before its terms start to grow
* ``recurrence`` Miller's backward recurrence with the Neumann-type
  normalisation sum, used for the band in between (and for large orders)
* ``reflection`` negative integer orders, J_{-n} = (-1)^n J_n
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

EPS = 2.220446049250313e-16
GAMMA_REL_ERR = 1e-13
SERIES_CROSSOVER = 10.0
SERIES_MAX_TERMS = 120
NU_MAX = 30.0

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_estimate: float
    method_tag: str

    def __float__(self) -> float:
        return self.value


def sinpi(x: float) -> float:
    """sin(pi*x) with the argument reduced exactly before scaling by pi."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r == 0.0 or abs(r) == 1.0:
        return 0.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def cospi(x: float) -> float:
    return sinpi(x + 0.5)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def gamma(x: float) -> float:
    """Gamma function for real ``x`` off the poles.

    Lanczos approximation for ``x >= 0.5`` and the reflection formula
    ``Gamma(x) Gamma(1-x) = pi / sin(pi x)`` below that.

    Raises
    ------
    DomainError
        If ``x`` is 0 or a negative integer.
    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise DomainError(f"gamma has a pole at x={x!r}", x)
    if x < 0.5:
        return math.pi / (sinpi(x) * gamma(1.0 - x))
    if x > 171.6:
        return math.inf
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    # split the power so t**(z+0.5) cannot overflow before exp(-t) is applied
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * half * (half * math.exp(-t)) * acc


def _check_order_j(nu: float) -> None:
    if not nu > -1.0:
        raise DomainError(f"Bessel order must satisfy nu > -1, got {nu!r}", nu)


# --------------------------------------------------------------------------
# J_nu, general real order (internal)


def _series_j(nu: float, t: float) -> EvalResult:
    half = 0.5 * t
    term = math.exp(nu * math.log(half)) / gamma(nu + 1.0)
    lead = abs(term)
    total = term
    abs_sum = abs(term)
    q = -half * half
    for m in range(1, SERIES_MAX_TERMS + 1):
        term *= q / (m * (nu + m))
        total += term
        abs_sum += abs(term)
        if abs(term) < 1e-17 * abs_sum:
            break
    # the leading coefficient inherits the relative error of gamma()
    return EvalResult(total, 2.0 * EPS * abs_sum + abs(term) + GAMMA_REL_ERR * lead, "series")


def _hankel_terms(nu: float, t: float):
    """Return (P, Q, truncation error, largest term) of Hankel's expansion."""
    mu = 4.0 * nu * nu
    p, q = 1.0, 0.0
    a = 1.0
    prev = math.inf
    largest = 1.0
    err = 0.0
    for k in range(1, 400):
        odd = 2 * k - 1
        a *= (mu - odd * odd) / (8.0 * k * t)
        mag = abs(a)
        if mag == 0.0:
            err = 0.0
            break
        if odd * odd > mu and mag > prev:
            # past the smallest term; the expansion starts to diverge
            err = prev
            break
        if k % 2:
            q += a if (k // 2) % 2 == 0 else -a
        else:
            p += -a if (k // 2) % 2 else a
        largest = max(largest, mag)
        prev = mag
        if mag < 1e-17:
            err = mag
            break
    else:
        err = prev
    return p, q, err, largest


def _asymptotic_j(nu: float, t: float) -> EvalResult:
    p, q, err, largest = _hankel_terms(nu, t)
    # cos/sin of chi = t - (2 nu + 1) pi / 4 by angle addition: libm reduces
    # t exactly, whereas forming chi first loses EPS * t in the phase
    shift = 0.25 * (2.0 * nu + 1.0)
    ct, st = math.cos(t), math.sin(t)
    cs, ss = cospi(shift), sinpi(shift)
    cos_chi = ct * cs + st * ss
    sin_chi = st * cs - ct * ss
    amp = math.sqrt(2.0 / (math.pi * t))
    value = amp * (p * cos_chi - q * sin_chi)
    est = amp * (err + 4.0 * EPS * largest + 4.0 * EPS)
    return EvalResult(value, est, "asymptotic")


def _miller_start(nu: float, t: float) -> int:
    return int(math.ceil(max(t - nu, 0.0) + 24.0 + 6.0 * t ** (1.0 / 3.0) + abs(nu)))


def _miller_j(nu: float, t: float) -> EvalResult:
    n_top = _miller_start(nu, t)
    n_top += n_top % 2
    # normalisation weights (nu+2k) Gamma(nu+k)/k!, Gamma(nu+1) for k = 0
    weights = [gamma(nu + 1.0)]
    c = weights[0]
    for k in range(1, n_top // 2 + 1):
        if k > 1:
            c *= (nu + k - 1) / k
        weights.append((nu + 2 * k) * c)
    j_next = 0.0
    j = 1.0
    norm = weights[-1] * j
    for n in range(n_top, 0, -1):
        j_prev = 2.0 * (nu + n) / t * j - j_next
        j_next, j = j, j_prev
        if (n - 1) % 2 == 0:
            norm += weights[(n - 1) // 2] * j
        if abs(j) > 1e250:
            j *= 1e-250
            j_next *= 1e-250
            norm *= 1e-250
    value = j * math.exp(nu * math.log(0.5 * t)) / norm
    scale = max(abs(value), math.sqrt(2.0 / (math.pi * t)))
    return EvalResult(value, 4.0 * EPS * math.sqrt(n_top) * scale * 10.0, "recurrence")


def _jv_result(nu: float, t: float) -> EvalResult:
    if t < 0.0:
        raise DomainError(f"Bessel argument must be nonnegative, got {t!r}", t)
    if nu < 0.0 and nu == math.floor(nu):
        r = _jv_result(-nu, t)
        sign = -1.0 if int(-nu) % 2 else 1.0
        return EvalResult(sign * r.value, r.abs_error_estimate, "reflection")
    if t == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, 0.0, "series")
        if nu > 0.0:
            return EvalResult(0.0, 0.0, "series")
        raise DomainError(f"J_nu(0) diverges for nu={nu!r} < 0", nu)
    if t <= SERIES_CROSSOVER:
        return _series_j(nu, t)
    r = _asymptotic_j(nu, t)
    if r.abs_error_estimate <= 1e-14:
        return r
    if nu < -1.0:
        return _downward_j(nu, t)
    return _miller_j(nu, t)


def _downward_j(nu: float, t: float) -> EvalResult:
    # J of large negative order grows like Y, so recurring downward in order
    # from the two orders just above -1 is stable.
    n = int(math.ceil(-nu)) - 1
    hi = _jv_result(nu + n + 1.0, t)
    lo = _jv_result(nu + n, t)
    j_up, j = hi.value, lo.value
    for m in range(n, 0, -1):
        order = nu + m
        j_up, j = j, 2.0 * order / t * j - j_up
    err = max(hi.abs_error_estimate, lo.abs_error_estimate) * (n + 1) * max(1.0, abs(j))
    return EvalResult(j, err, "recurrence")


def jv(nu: float, t: float) -> float:
    """J_nu(t) as a float; any real order (negative orders included)."""
    return _jv_result(float(nu), float(t)).value


def bessel_j(nu: float, t: float) -> EvalResult:
    """Bessel function of the first kind J_nu(t) for nu > -1, t >= 0.

    Raises
    ------
    DomainError
        For nu <= -1, t < 0, or t = 0 with nu < 0.
    """
    nu = float(nu)
    t = float(t)
    _check_order_j(nu)
    return _jv_result(nu, t)


def jv_prime(nu: float, t: float) -> float:
    """Derivative J_nu'(t) = (nu/t) J_nu(t) - J_{nu+1}(t)."""
    return nu / t * jv(nu, t) - jv(nu + 1.0, t)


# --------------------------------------------------------------------------
# Y_nu


def _y_guard(nu: float) -> float:
    s = sinpi(nu)
    if abs(s) <= 1e-8:
        raise DomainError(f"integer-order Y is not supported (nu={nu!r})", nu)
    if abs(nu) > NU_MAX:
        raise DomainError(f"|nu| must not exceed {NU_MAX}, got {nu!r}", nu)
    return s


def bessel_y(nu: float, t: float) -> EvalResult:
    """Neumann function Y_nu(t) = (cos(nu pi) J_nu - J_{-nu}) / sin(nu pi)."""
    nu = float(nu)
    t = float(t)
    s = _y_guard(nu)
    if not t > 0.0:
        raise DomainError(f"Y_nu requires t > 0, got {t!r}", t)
    c = cospi(nu)
    a = _jv_result(nu, t)
    b = _jv_result(-nu, t)
    value = (c * a.value - b.value) / s
    err = (abs(c) * a.abs_error_estimate + b.abs_error_estimate) / abs(s)
    return EvalResult(value, err + EPS * abs(value), b.method_tag)


def yv(nu: float, t: float) -> float:
    return bessel_y(nu, t).value


# --------------------------------------------------------------------------
# I_nu, K_nu


def _series_i(nu: float, t: float) -> EvalResult:
    half = 0.5 * t
    term = math.exp(nu * math.log(half)) / gamma(nu + 1.0)
    total = term
    abs_sum = abs(term)
    q = half * half
    for m in range(1, 2000):
        term *= q / (m * (nu + m))
        total += term
        abs_sum += abs(term)
        if abs(term) < 1e-17 * abs_sum and m > q:
            break
    return EvalResult(total, 4.0 * EPS * abs_sum, "series")


def bessel_i(nu: float, t: float) -> EvalResult:
    """Modified Bessel function I_nu(t) by its power series (nu > -1)."""
    nu = float(nu)
    t = float(t)
    _check_order_j(nu)
    if t < 0.0:
        raise DomainError(f"I_nu requires t >= 0, got {t!r}", t)
    if t == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, 0.0, "series")
        if nu > 0.0:
            return EvalResult(0.0, 0.0, "series")
        raise DomainError(f"I_nu(0) diverges for nu={nu!r} < 0", nu)
    if t > 700.0:
        raise DomainError("I_nu overflows for t > 700", t)
    return _series_i(nu, t)


def _k_quadrature(nu: float, t: float) -> EvalResult:
    # K_nu(t) = int_0^inf exp(-t cosh u) cosh(nu u) du, trapezoid rule on the
    # scaled integrand exp(-t (cosh u - 1)); geometric convergence in 1/h.
    u_max = math.acosh(1.0 + 50.0 / t)

    def trap(h):
        n = int(math.ceil(u_max / h))
        s = 0.5
        for i in range(1, n + 1):
            u = i * h
            s += math.exp(-t * (math.cosh(u) - 1.0)) * math.cosh(nu * u)
        return s * h

    coarse = trap(0.25)
    fine = trap(0.125)
    scale = math.exp(-t)
    return EvalResult(fine * scale, (abs(fine - coarse) + 8 * EPS * fine) * scale, "quadrature")


def bessel_k(nu: float, t: float) -> EvalResult:
    """Modified Bessel function K_nu(t) for non-integer nu and t > 0.

    Near the origin the reflection quotient pi (I_{-nu} - I_nu) / (2 sin nu pi)
    is used; above t = 1 the quotient cancels badly, so an integral
    representation takes over.
    """
    nu = float(nu)
    t = float(t)
    s = sinpi(nu)
    if abs(s) <= 1e-8:
        raise DomainError(f"integer-order K is not supported (nu={nu!r})", nu)
    if not t > 0.0:
        raise DomainError(f"K_nu requires t > 0, got {t!r}", t)
    nu = abs(nu)  # K is even in nu
    s = sinpi(nu)
    if t <= 1.0 and nu < 1.0:
        a = _series_i(-nu, t)
        b = _series_i(nu, t)
        value = math.pi * (a.value - b.value) / (2.0 * s)
        err = math.pi * (a.abs_error_estimate + b.abs_error_estimate) / (2.0 * abs(s))
        return EvalResult(value, err, "reflection")
    return _k_quadrature(nu, t)
