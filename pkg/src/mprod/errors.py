"""Exception types raised across the library."""


class MProdError(Exception):
    """Base class for every error this library raises on purpose."""


class DimMismatch(MProdError, ValueError):
    """Operand shapes do not conform."""


class SingularTransform(MProdError):
    """The mode-3 transform matrix is not invertible."""


class SingularSlice(MProdError):
    """A transform-domain frontal slice is numerically singular.

    Carries the offending slice index in ``.slice_index``.
    """

    def __init__(self, slice_index, message=None):
        self.slice_index = slice_index
        super().__init__(message or f"slice {slice_index} is numerically singular")


class SingularSystem(MProdError):
    """A linear solve hit a pivot below the rank threshold."""


class ExistenceViolated(MProdError):
    """The outer inverse for the requested range/null prescription does not exist.

    Carries the offending slice index in ``.slice_index``.
    """

    def __init__(self, slice_index, message=None):
        self.slice_index = slice_index
        super().__init__(
            message
            or f"rank guard failed on slice {slice_index}: outer inverse does not exist"
        )


class DivisionByZeroFunction(MProdError, ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtPoint(MProdError, ZeroDivisionError):
    """A rational function was evaluated at a pole."""


class MalformedHeader(MProdError, ValueError):
    """An input file header does not match the expected grammar."""


class UnsupportedMaxval(MProdError, ValueError):
    """PPM file declares a maximum channel value other than 255."""


class TruncatedPayload(MProdError, ValueError):
    """An input file ended before all declared entries were read."""


class TooSmall(MProdError, ValueError):
    """Image is smaller than the structural-similarity window."""
