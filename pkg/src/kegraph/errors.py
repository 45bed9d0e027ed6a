"""Exception taxonomy shared by all kegraph modules."""


class KegraphError(Exception):
    """Base class for all kegraph errors."""


class InputError(KegraphError, ValueError):
    """Malformed input: bad vertex ids, self-loops, unparsable edge lists, unknown names."""


class CapacityError(KegraphError):
    """A configured solver cap (vertex count or enumeration size) was exceeded."""


class PreconditionError(KegraphError):
    """An operation was called on a graph that violates its stated precondition."""


class InternalInvariantError(KegraphError):
    """A cross-checked internal invariant failed; indicates a solver bug, not bad input."""
