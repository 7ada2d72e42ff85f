"""Exception types raised across the package."""


class SlimCountError(Exception):
    """Base class for all errors raised by slimcount."""


class EmptyPermutationError(SlimCountError, ValueError):
    """Segment machinery was asked about the degree-0 permutation."""


class PermutationParseError(SlimCountError, ValueError):
    """Input text or sequence is not a bijection of {1, ..., h}."""


class DimensionError(SlimCountError, ValueError):
    """A partial permutation does not fit the requested grid."""


class InvalidSizeError(SlimCountError, ValueError):
    """A lattice size or degree argument is out of its domain."""


class TableRangeError(SlimCountError, IndexError):
    """A count table was read outside the range it was built for."""


class ConsistencyError(SlimCountError, RuntimeError):
    """An internal invariant failed; this always indicates a bug."""


class ResourceGuardError(SlimCountError, RuntimeError):
    """A brute-force request exceeds its configured limit."""
