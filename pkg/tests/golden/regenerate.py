"""Rewrite the CLI golden files.  Run only after an intended output change:

    python3 tests/golden/regenerate.py
"""

from __future__ import annotations

import os

from oscpos.cli import main

HERE = os.path.dirname(os.path.abspath(__file__))

GOLDENS = {
    "eval_sine_rational.csv": ["eval", "--kernel", "sine", "--function", "rational",
                               "--params", "gamma=1,delta=1,a=1", "--x-start", "0.5", "--x-stop", "2",
                               "--x-count", "4"],
    "eval_hankel_power.json": ["eval", "--kernel", "hankel", "--nu", "1", "--function", "power",
                               "--params", "beta=0.5", "--x-start", "2", "--format", "json"],
    "zeros_hankel_half.csv": ["zeros", "--kernel", "hankel", "--nu", "0.5", "--n", "5"],
    "zeros_hankel_2.json": ["zeros", "--kernel", "bessel", "--nu", "2", "--n", "8", "--format", "json"],
}

if __name__ == "__main__":
    for name, argv in GOLDENS.items():
        assert main(argv + ["--out", os.path.join(HERE, name)]) == 0, name
        print("wrote", name)
