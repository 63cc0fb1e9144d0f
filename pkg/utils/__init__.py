"""Utility modules for packcover."""
from .errors import (
    PackCoverError,
    DimensionError,
    InstanceFormatError,
    InfeasibleCoveringError,
    UnknownFamilyError,
    ParameterRangeError,
    SenseError,
    InfeasibleRootError,
    ResourceLimitError,
    LpInfeasibleError,
    UndefinedMarginError,
    MalformedPermutationError,
    InvalidAssignmentError,
    ConfigFormatError,
)

__all__ = [
    'PackCoverError',
    'DimensionError',
    'InstanceFormatError',
    'InfeasibleCoveringError',
    'UnknownFamilyError',
    'ParameterRangeError',
    'SenseError',
    'InfeasibleRootError',
    'ResourceLimitError',
    'LpInfeasibleError',
    'UndefinedMarginError',
    'MalformedPermutationError',
    'InvalidAssignmentError',
    'ConfigFormatError',
]
