"""Exception hierarchy shared by all subsystems.

The CLI maps these onto exit codes: ConfigError -> 2, ExcludedPointError -> 4,
everything else derived from NumericalError -> 3.
"""


class QwalkError(Exception):
    """Base class for all package errors."""


class ConfigError(QwalkError):
    """Invalid user-supplied configuration (bad flag, bad value)."""


class NumericalError(QwalkError):
    """A numerical procedure failed or hit a singular configuration."""


class SingularMatrixError(NumericalError):
    """Matrix inversion requested for a (near-)singular matrix."""

    def __init__(self, det, context=""):
        self.det = det
        msg = f"singular matrix (det = {det!r})"
        if context:
            msg += f" in {context}"
        super().__init__(msg)


class FlowSingularityError(NumericalError):
    """The RG flow hit a vanishing denominator factor."""

    def __init__(self, factor, value=None):
        self.factor = factor
        self.value = value
        super().__init__(f"flow denominator factor {factor} vanishes"
                         + (f" (value {value!r})" if value is not None else ""))


class ExcludedPointError(QwalkError):
    """Evaluation requested at an excluded or exceptional Laplace parameter."""

    def __init__(self, z, reason):
        self.z = z
        self.reason = reason
        super().__init__(f"z = {z!r} is excluded: {reason}")


class BranchSingularityError(NumericalError):
    """Closed-form evaluation at a branch point (square-root argument zero)."""


class ExpansionAtPoleError(NumericalError):
    """Taylor expansion requested at a pole of the function."""


class RootFindingError(NumericalError):
    """Root finder failed to reach the required residual."""

    def __init__(self, worst_residual, degree):
        self.worst_residual = worst_residual
        self.degree = degree
        super().__init__(
            f"root polish failed: worst residual {worst_residual:.3e} on degree {degree}")


class DegreeOverflowError(NumericalError):
    """Symbolic iteration exceeded the supported polynomial degree."""


class BoundaryReachError(NumericalError):
    """Wavefront would leave the allocated line lattice."""


class InsufficientDataError(NumericalError):
    """Not enough recorded samples for the requested fit."""
