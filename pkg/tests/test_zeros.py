from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oscpos import special
from oscpos.errors import BracketError, DomainError, IterationLimitError
from oscpos.kernels import KernelSpec
from oscpos.roots import refine_zero
from oscpos.sturm import PhiSpec, phi_constant
from oscpos.zeros import (
    ZeroSequence,
    bessel_j_zero,
    bessel_j_zeros,
    enumerate_zeros,
    mcmahon_estimate,
)

# max_k k |j_{nu,k} - mcmahon| over k = 10..100, fitted once and rounded up
MCMAHON_C = {0.0: 0.0409, 0.25: 0.0303, 0.75: 0.0497, 1.0: 0.120, 2.0: 0.593, 5.0: 3.86}


def _nu_key(nu):
    return str(float(nu))


# ---------------------------------------------------------------- McMahon


@pytest.mark.parametrize("k", [1, 2, 7, 40])
def test_mcmahon_half_order_is_k_pi(k):
    assert mcmahon_estimate(0.5, k) == pytest.approx(k * math.pi, rel=1e-15)


def test_mcmahon_examples():
    assert mcmahon_estimate(1.0, 3) == pytest.approx(3.25 * math.pi, rel=1e-15)
    assert mcmahon_estimate(0.0, 1) == pytest.approx(0.75 * math.pi, rel=1e-15)


@pytest.mark.parametrize("nu", sorted(MCMAHON_C))
def test_mcmahon_remainder_is_order_one_over_k(nu):
    zs = bessel_j_zeros(nu, 100)
    worst = max(k * abs(zs[k - 1] - mcmahon_estimate(nu, k)) for k in range(10, 101))
    assert worst <= MCMAHON_C[nu]


# ---------------------------------------------------------------- Bessel zeros


def test_bessel_j_zero_examples(oracles):
    assert bessel_j_zero(0.5, 2, 1e-12) == pytest.approx(2 * math.pi, abs=1e-12)
    assert bessel_j_zero(0.0, 1, 1e-12) == pytest.approx(2.404825557695773, abs=1e-12)
    z = bessel_j_zero(1.0, 1, 1e-12)
    assert math.pi < z < 4.5
    assert z == pytest.approx(oracles["jzeros"]["1.0"][0], abs=1e-12)


@pytest.mark.parametrize("nu", [0.0, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0])
def test_bessel_zeros_against_frozen_table(oracles, nu):
    want = oracles["jzeros"][_nu_key(nu)]
    got = bessel_j_zeros(nu, len(want), 1e-12)
    assert np.max(np.abs(np.asarray(got) - want)) <= 1e-11


def test_bessel_j_zero_is_increasing_and_a_root():
    prev = 0.0
    for k in range(1, 12):
        z = bessel_j_zero(2.0, k, 1e-12)
        assert z > prev
        assert abs(special.jv(2.0, z)) < 1e-11
        prev = z


def test_bessel_zero_large_order_early_zero():
    # first zero of J_30 lies far right of the McMahon estimate
    z = bessel_j_zero(30.0, 1, 1e-12)
    assert z > 30.0 and abs(special.jv(30.0, z)) < 1e-12


# ---------------------------------------------------------------- enumeration


def test_enumerate_sine_and_cosine():
    assert enumerate_zeros(KernelSpec.sine(), 3, 1e-12).zeros == pytest.approx((math.pi, 2 * math.pi, 3 * math.pi))
    assert enumerate_zeros(KernelSpec.cosine(), 2, 1e-12).zeros == pytest.approx((0.5 * math.pi, 1.5 * math.pi))


def test_enumerate_scaled_first_zero():
    seq = enumerate_zeros(KernelSpec.scaled_bessel(0.25, 2.0), 1, 1e-10)
    assert seq[0] == pytest.approx(math.sqrt(bessel_j_zero(0.25, 1)), abs=1e-10)


def test_enumerate_bessel_nu2(oracles):
    seq = enumerate_zeros(KernelSpec.bessel_sqrt(2.0), 5, 1e-10)
    assert len(seq) == seq.count == 5
    assert seq.check_invariants() == []
    assert np.allclose(seq.zeros, oracles["jzeros"]["2.0"][:5], atol=1e-10)


def test_enumerate_rejects_nonpositive_n():
    with pytest.raises(DomainError):
        enumerate_zeros(KernelSpec.sine(), 0)


@pytest.mark.parametrize(
    "kernel",
    [KernelSpec.bessel_sqrt(0.0), KernelSpec.bessel_sqrt(1.5), KernelSpec.scaled_bessel(0.5, 1.5),
     KernelSpec.neumann_sqrt(0.75), KernelSpec.cosine()],
    ids=lambda k: k.label,
)
def test_enumerated_sequences_satisfy_invariants(kernel):
    seq = enumerate_zeros(kernel, 15, 1e-12)
    assert seq.check_invariants() == []
    assert all(z > 0 for z in seq.zeros)


def test_check_invariants_flags_a_bad_sequence():
    bad = ZeroSequence(KernelSpec.sine(), (math.pi, 3.5, 2 * math.pi), 1e-12)
    problems = bad.check_invariants()
    assert any("sign change" in p for p in problems)
    unordered = ZeroSequence(KernelSpec.sine(), (2 * math.pi, math.pi), 1e-12)
    assert any("not increasing" in p for p in unordered.check_invariants())


def test_ode_kernel_zeros():
    # u'' + 4u = 0, u(0) = 0, u'(0) = 1 is sin(2t)/2 with zeros k pi / 2
    seq = enumerate_zeros(KernelSpec.ode(phi_constant(4.0)), 10, 1e-10)
    want = [k * math.pi / 2 for k in range(1, 11)]
    assert np.max(np.abs(np.asarray(seq.zeros) - want)) < 1e-8


# ---------------------------------------------------------------- spacing laws


@pytest.mark.parametrize("nu", [0.75, 1.0, 2.0, 5.0])
def test_spacing_decreases_to_pi(nu):
    d = enumerate_zeros(KernelSpec.bessel_sqrt(nu), 51, 1e-12).spacings
    assert np.all(np.diff(d) < 0)
    assert np.all(d > math.pi)
    assert d[49] - math.pi < 0.05


@pytest.mark.parametrize("nu", [0.0, 0.25])
def test_spacing_reversed_below_half(nu):
    d = enumerate_zeros(KernelSpec.bessel_sqrt(nu), 52, 1e-12).spacings
    assert np.all(np.diff(d) >= 0)
    assert np.all(d <= math.pi)


def test_sturm_box_bound_on_ode_kernel():
    # 1.5 <= phi <= 2.5 everywhere
    phi = PhiSpec(lambda t: 2.0 + 0.5 * math.sin(t), "none", name="wobble")
    seq = enumerate_zeros(KernelSpec.ode(phi), 20, 1e-10)
    d = seq.spacings
    assert np.all(d > math.pi / math.sqrt(2.5))
    assert np.all(d < math.pi / math.sqrt(1.5))


# ---------------------------------------------------------------- refine_zero


def test_refine_zero_examples(oracles):
    assert refine_zero(math.sin, (3.0, 3.3), 1e-12) == pytest.approx(math.pi, abs=1e-12)
    assert refine_zero(math.cos, (1.0, 2.0), 1e-12) == pytest.approx(math.pi / 2, abs=1e-12)
    j01 = refine_zero(lambda t: special.jv(0.0, t), (2.0, 3.0), 1e-12)
    assert j01 == pytest.approx(oracles["jzeros"]["0.0"][0], abs=1e-12)


def test_refine_zero_without_sign_change():
    with pytest.raises(BracketError):
        refine_zero(math.sin, (0.5, 1.0))


def test_refine_zero_iteration_limit():
    with pytest.raises(IterationLimitError):
        refine_zero(math.sin, (3.0, 3.3), tol=1e-300, max_iter=5)


@given(a=st.floats(0.05, 3.0), b=st.floats(3.2, 6.2))
def test_refine_zero_stays_inside_bracket(a, b):
    seen = []

    def u(t):
        seen.append(t)
        return math.sin(t)

    r = refine_zero(u, (a, b), 1e-12, du=math.cos)
    assert r == pytest.approx(math.pi, abs=1e-12)
    assert all(a <= t <= b for t in seen)
