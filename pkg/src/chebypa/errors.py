"""Exception hierarchy shared by every module."""


class PAError(Exception):
    """Base class for library errors."""


class InvalidArgumentError(PAError, ValueError):
    """An argument is outside the domain of the operation."""


class PreconditionError(PAError, ValueError):
    """A theorem's hypotheses do not hold for the given input."""


class RangeError(PAError, IndexError):
    """An index is outside the valid range."""


class ResourceLimitError(PAError, RuntimeError):
    """A feasibility guard refused the request."""
