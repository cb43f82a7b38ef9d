"""Exception hierarchy shared by all modules."""


class CombSpecError(Exception):
    """Base class for library errors."""


class InvalidArgument(CombSpecError, ValueError):
    """An argument is outside the domain of the operation."""


class PoleError(CombSpecError, ArithmeticError):
    """Evaluation point lies on (or within tolerance of) a pole."""


class SingularBlockError(CombSpecError, ArithmeticError):
    """The pivot block of a Schur identity is numerically singular."""


class ConvergenceError(CombSpecError, ArithmeticError):
    """An iterative solver did not converge within its sweep budget."""


class InternalConsistencyError(CombSpecError):
    """Two routes that must agree by theory disagree."""


class PrecisionError(CombSpecError):
    """A floating-point guard tripped (a quantity came too close to a boundary case)."""


class ValidationFailure(InternalConsistencyError):
    """Oracle cross-check failed."""
