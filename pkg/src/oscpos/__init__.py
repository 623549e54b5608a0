"""Oscillatory integral transforms by arch decomposition, with positivity
certificates for sign-definite transforms."""

from __future__ import annotations

from .catalog import FAMILIES, make_profile
from .errors import (
    BracketError,
    CapabilityError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    IterationLimitError,
    OscposError,
    PreconditionError,
    SpanError,
    StiffnessError,
)
from .kernels import KernelSpec
from .positivity import PositivityCertificate, certify, check_hypotheses, reduce_order
from .profiles import Declarations, ProfileFunction
from .special import EvalResult, bessel_i, bessel_j, bessel_k, bessel_y, gamma
from .sturm import check_arch_convexity, classify_oscillation, compare_solutions, solve_normal_form
from .transforms import ArchSeries, brute_force_oracle, transform_eval
from .zeros import ZeroSequence, enumerate_zeros, refine_zero

__version__ = "0.1.0"
