"""Exception and warning types shared across the package."""


class TehnetError(Exception):
    """Base class for every error raised by this package."""


class SpecError(TehnetError, ValueError):
    """A network specification is malformed or inconsistent."""


class NotPowerOfTwoError(SpecError):
    """The hypercube node count is not an exact power of two."""


class NonPositiveDimensionError(SpecError):
    """A dimension (rows, columns, or cube node count) is below one."""


class FamilyMismatchError(SpecError):
    """Dimensions are incompatible with the requested network family."""


class AddressOutOfRangeError(TehnetError, ValueError):
    """A node address component violates its bound for the given network."""


class IndexOutOfRangeError(TehnetError, IndexError):
    """A dense node index is outside 0..node_count-1."""


class InvalidDimensionError(TehnetError, ValueError):
    """A hypercube bit index is outside 0..n-1."""


class UnsupportedFormatError(TehnetError, ValueError):
    """An unknown serialization format name was requested."""


class ResourceLimitError(TehnetError, RuntimeError):
    """An operation would exceed the configured node or size cap."""


class TooManyFaultsError(TehnetError, ValueError):
    """More faults were requested than elements available to fail."""


class UnreachableError(TehnetError, RuntimeError):
    """No path exists between the requested endpoints."""


class ClosedFormApproximationWarning(UserWarning):
    """A closed-form result is only approximate for the given dimensions.

    Emitted when a torus dimension is below 3: wraparound and step links
    coincide there, so the simple graph has fewer links than the closed
    form counts.
    """
