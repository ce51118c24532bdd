"""Exception types shared across the package.

Plain argument mistakes (bad bounds, mismatched lengths, out-of-range
parameters) raise the builtin ``ValueError``; the classes here mark
failures with domain meaning.
"""


class EntroflowError(Exception):
    """Base class for package-specific failures."""


class DegenerateDensityError(EntroflowError):
    """A field that should carry positive probability mass does not."""


class SchemeFailureError(EntroflowError):
    """A numerical scheme lost positivity or otherwise left its contract."""


class ConvergenceError(EntroflowError):
    """An iterative solver hit its iteration cap. Carries the residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class InfeasibleTargetError(EntroflowError):
    """A terminal density puts mass where the reference flow has none."""


class ConfigError(EntroflowError):
    """A scenario document violates the configuration schema."""
