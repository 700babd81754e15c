class AffineDeltaError(Exception):
    """Base exception for affine-delta"""
    pass


class InvalidInputError(AffineDeltaError, ValueError):
    """Base exception for rejected user or caller input"""
    pass


class InvalidLieTypeError(InvalidInputError):
    """Raised when a family/rank pair is not a finite-type root system"""
    pass


class DimensionMismatchError(InvalidInputError):
    """Raised when a coordinate vector does not have rank-many entries"""
    pass


class IndexOutOfRangeError(InvalidInputError):
    """Raised when a simple or affine root index is outside its range"""
    pass


class NotMinisculeError(InvalidInputError):
    """Raised when a coweight index is not miniscule for the type"""
    pass


class NotAdmissibleError(InvalidInputError):
    """Raised when (level, weight) is not dominant with <weight, theta> <= level"""
    pass


class ArithmeticOverflowError(AffineDeltaError):
    """Raised when an intermediate leaves the signed 64-bit range"""
    pass


# Results that contradict the closed forms. These abort loudly.
class InconsistencyError(AffineDeltaError):
    """Base exception for internally inconsistent results."""
    pass


class NotAPermutationError(InconsistencyError):
    """A Weyl word sent an affine simple root outside the affine simple roots."""
    pass


class ActionTableError(InconsistencyError):
    """An action map left the admissible set or failed to be injective."""
    pass


class NonIntegralComarkError(InconsistencyError):
    """A mark times half squared root length was not an integer."""
    pass
