"""Regenerate oracles.json with mpmath at 40 significant digits.

Run from the repository root:  python3 tests/data/make_oracles.py
The values are frozen in the JSON file; tests never call mpmath for them.
"""

from __future__ import annotations

import json
import os

import mpmath as mp

mp.mp.dps = 40

GAMMA_X = [0.1, 0.3, 0.5, 0.9, 1.25, 2.5, 7.25, 10.5, 20.0, 33.3, 50.0, -0.5, -1.5, -2.7]
J_NU = [-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 2.5, 5.0, 10.0, 30.0]
J_T = [0.0, 0.01, 0.5, 1.0, 2.5, 5.0, 9.999, 10.001, 12.0, 20.0, 50.0, 100.0, 500.0, 1000.0]
Y_NU = [-0.75, -0.5, 0.25, 0.75, 1.5, 2.3]
Y_T = [0.1, 0.5, 1.0, 1.5707963267948966, 5.0, 10.0, 30.0, 100.0]
I_NU = [0.0, 0.25, 0.5, 1.0, 1.5]
K_NU = [0.25, 0.5, 0.75, 1.5]
IK_T = [0.01, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0]
ZERO_NU = [0.0, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0]
N_ZEROS = 60


def f(v):
    return float(v)


def transform_values():
    """Oscillatory integrals by mpmath.quadosc, which knows nothing about arches."""
    out = []

    def add(name, integrand, x, zeros=None, omega=None):
        # t = s^4 on [0, 1] removes the integrable endpoint singularities
        head = mp.quad(lambda s: integrand(s ** 4) * 4 * s ** 3, [0, 0.5, 1])
        if zeros is not None:
            tail = mp.quadosc(integrand, [1, mp.inf], zeros=zeros)
        else:
            tail = mp.quadosc(integrand, [1, mp.inf], omega=omega)
        out.append({"name": name, "x": x, "value": f(head + tail)})

    x = mp.mpf(1)
    add("cosine_shifted_power_a1_l2", lambda t: mp.cos(x * t) / (t + 1) ** 2, 1.0, omega=x)
    for nu in (mp.mpf(-0.75), mp.mpf(0.75)):
        add(f"y_nu{float(nu):g}_exp_t-0.25", lambda t, nu=nu: mp.exp(-t) * t ** -0.25 * mp.bessely(nu, x * t) * mp.sqrt(x * t),
            1.0, omega=x)
        add(f"y_nu{float(nu):g}_exp_t-0.5", lambda t, nu=nu: mp.exp(-t) * t ** -0.5 * mp.bessely(nu, x * t) * mp.sqrt(x * t),
            1.0, omega=x)
    # scaled kernel sqrt(t) J_nu((xt)^alpha): zeros at j^{1/alpha}
    nu, alpha = mp.mpf(0.25), mp.mpf(2)
    add("scaled_nu0.25_alpha2_exp", lambda t: mp.exp(-t) * mp.besselj(nu, (x * t) ** alpha) * mp.sqrt(x * t), 1.0,
        zeros=lambda n: mp.besseljzero(nu, int(n)) ** (1 / alpha))
    for xv in (0.5, 2.0):
        xx = mp.mpf(xv)
        add("hankel_nu2_exp", lambda t, xx=xx: mp.exp(-t) * mp.besselj(2, xx * t) * mp.sqrt(xx * t), xv, omega=xx)
        add("sine_power_exp_b1_beta0.5", lambda t, xx=xx: mp.exp(-t) * t ** -0.5 * mp.sin(xx * t), xv, omega=xx)
    return out


def main():
    data = {
        "gamma": [[x, f(mp.gamma(x))] for x in GAMMA_X],
        "jv": [[nu, t, f(mp.besselj(nu, t))] for nu in J_NU for t in J_T if not (nu < 0 and t == 0.0)],
        "yv": [[nu, t, f(mp.bessely(nu, t))] for nu in Y_NU for t in Y_T],
        "iv": [[nu, t, f(mp.besseli(nu, t))] for nu in I_NU for t in IK_T],
        "kv": [[nu, t, f(mp.besselk(nu, t))] for nu in K_NU for t in IK_T],
        "jzeros": {str(nu): [f(mp.besseljzero(nu, k)) for k in range(1, N_ZEROS + 1)] for nu in ZERO_NU},
        "transforms": transform_values(),
    }
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "oracles.json")
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
