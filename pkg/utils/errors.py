"""
Exception hierarchy for packcover.

Every error carries a plain message; subclasses also derive from the closest
builtin so callers can catch ValueError / RuntimeError generically.
"""


class PackCoverError(Exception):
    """Base class for all packcover errors."""


class DimensionError(PackCoverError, ValueError):
    """A vector or partial assignment does not match the expected shape."""


class InstanceFormatError(PackCoverError, ValueError):
    """An instance file could not be parsed or failed validation."""


class InfeasibleCoveringError(PackCoverError, ValueError):
    """A covering row can never be satisfied inside the box (d_j < 0)."""


class UnknownFamilyError(PackCoverError, ValueError):
    """Requested generator family does not exist."""


class ParameterRangeError(PackCoverError, ValueError):
    """A parameter lies outside its documented range."""


class SenseError(PackCoverError, ValueError):
    """An operation was called on an instance of the wrong sense."""


class InfeasibleRootError(PackCoverError, RuntimeError):
    """Every value at a variable has belief -inf; no valid completion exists."""


class ResourceLimitError(PackCoverError, RuntimeError):
    """A configured cap (tree nodes, bases, lift fold, ...) would be exceeded."""


class LpInfeasibleError(PackCoverError, RuntimeError):
    """The LP relaxation has no feasible point."""


class UndefinedMarginError(PackCoverError, ValueError):
    """c(P, w) is undefined because the polytope is the single point x*."""


class MalformedPermutationError(PackCoverError, ValueError):
    """A lift permutation is missing, has the wrong length or repeats an index."""


class InvalidAssignmentError(PackCoverError, ValueError):
    """An assignment violates box or row constraints where validity is required."""


class ConfigFormatError(PackCoverError, ValueError):
    """A sweep config file could not be read, parsed or validated."""
