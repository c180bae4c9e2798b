"""Exception types shared across the toolkit.

Invalid parameters and shape mismatches raise plain ``ValueError``; the
classes below cover failures that are specific to running an MM iteration.
"""


class ToolkitError(Exception):
    """Base class for toolkit-specific failures."""


class DomainError(ToolkitError, ValueError):
    """A point lies outside the domain required by an operation."""


class NumericalError(ToolkitError):
    """A computation produced a non-finite or otherwise unusable value."""


class DescentViolationError(ToolkitError):
    """The objective increased across an iteration beyond the allowed slack.

    Descent is the defining property of a majorize-minimize step, so a
    violation is an error rather than a warning.
    """

    def __init__(self, iteration, f_before, f_after, trace=None):
        self.iteration = iteration
        self.f_before = f_before
        self.f_after = f_after
        self.trace = trace
        super().__init__(
            f"descent violated at iteration {iteration}: "
            f"f went from {f_before!r} to {f_after!r}"
        )


class MajorizationViolationError(ToolkitError):
    """A surrogate failed the tangency or dominance condition at runtime."""

    def __init__(self, message, iteration=None, trace=None):
        self.iteration = iteration
        self.trace = trace
        super().__init__(message)


class DivergenceError(ToolkitError):
    """Iterates escaped the configured divergence bound."""
