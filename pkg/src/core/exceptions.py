from typing import Optional


class DeformationRingError(Exception):
    """Base class for every error raised by the engine"""

    exit_code: int = 1


class DimensionMismatchError(DeformationRingError, ValueError):
    """Operands disagree on variable count, truncation degree, coefficients or shape"""

    exit_code = 2


class UnsupportedModeError(DeformationRingError):
    """Requested computation is not available for the given mode or input"""

    exit_code = 2


class IndexOutOfRangeError(DeformationRingError, ValueError):
    """An index (h-index, s-index, distance, vertex) is outside its range"""

    exit_code = 2


class ProjectiveModuleError(DeformationRingError):
    """Operation requires a non-projective module"""

    exit_code = 2


class ZeroModuleError(DeformationRingError):
    """Operation requires a nonzero module"""

    exit_code = 2


class TrivialLiftError(DeformationRingError):
    """The deformation ring is k; there is no nontrivial universal lift"""

    exit_code = 2


class NotArtinianError(DeformationRingError):
    """Quotient dimension did not stabilize below the maximal truncation degree"""

    exit_code = 3

    def __init__(self, message: str, last_degree: Optional[int] = None, last_dimension: Optional[int] = None):
        super().__init__(message)
        self.last_degree = last_degree
        self.last_dimension = last_dimension

    def __reduce__(self):
        return self.__class__, (self.args[0], self.last_degree, self.last_dimension)


class ResourceCapError(DeformationRingError):
    """A search space or linear system exceeds its configured cap"""

    exit_code = 3

    def __init__(self, message: str, measured: int, cap: int):
        super().__init__(f"{message} (measured {measured}, cap {cap})")
        self.subject = message
        self.measured = measured
        self.cap = cap

    def __reduce__(self):
        return self.__class__, (self.subject, self.measured, self.cap)


class VerificationError(DeformationRingError):
    """Two independent computations of the same quantity disagree"""

    exit_code = 1
