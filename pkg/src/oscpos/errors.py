"""Exception hierarchy shared by every module.

The CLI maps :class:`DomainError` (and subclasses) to exit code 2 and
:class:`ConvergenceError` (and subclasses) to exit code 3.
"""


class OscposError(Exception):
    """Base class for all library errors."""


class DomainError(OscposError, ValueError):
    """An argument lies outside the region where an operation is defined."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class PreconditionError(DomainError):
    """A caller-declared property was contradicted by sampling."""


class CapabilityError(DomainError):
    """An optional capability (for example a derivative evaluator) is missing."""


class ConvergenceError(OscposError, ArithmeticError):
    """A numerical procedure did not reach its tolerance."""


class IterationLimitError(ConvergenceError):
    pass


class BracketError(ConvergenceError):
    """No valid sign-change bracket for a root."""


class DivergenceError(ConvergenceError):
    """An integral or series does not converge."""


class SpanError(ConvergenceError):
    """An ODE trajectory does not cover the requested number of roots."""


class StiffnessError(ConvergenceError):
    """The integrator step size collapsed."""
