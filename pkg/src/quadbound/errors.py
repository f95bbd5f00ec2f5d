"""Exception types raised by quadbound."""


class QuadboundError(Exception):
    """Base class for all library errors."""


class DomainError(QuadboundError, ValueError):
    """Argument outside the domain of the operation."""


class BranchError(DomainError):
    """Point lies on the cut [-1, 1] where the Joukowski inverse is ambiguous."""


class UnsupportedCaseError(QuadboundError, ValueError):
    """Operation is not defined for the requested measure/size combination."""


class NumericError(QuadboundError, ArithmeticError):
    """Base class for numerical failures (non-convergence, breakdown)."""


class InstabilityError(NumericError):
    """Recurrence breakdown: a nonpositive beta coefficient appeared."""

    def __init__(self, index, value):
        super().__init__(f"recurrence breakdown at index {index}: beta={value!r}")
        self.index = index
        self.value = value


class ConvergenceError(NumericError):
    """An iterative solver did not converge."""


class AccuracyError(NumericError):
    """Requested accuracy was not reached; carries the best estimate."""

    def __init__(self, message, estimate=None, gap=None):
        super().__init__(message)
        self.estimate = estimate
        self.gap = gap


class SearchFailure(NumericError):
    """The max-modulus location never stabilised inside the search range."""


class InfeasibleError(NumericError):
    """Empty search interval for a bound infimum."""
