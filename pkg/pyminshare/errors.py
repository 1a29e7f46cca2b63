"""Exceptions raised by pyminshare.

All library errors derive from `PyminshareError`. Most also derive from
`ValueError` so callers that only care about bad input can catch that.
"""


class PyminshareError(Exception):
    """Base class for all pyminshare errors."""


class DistributionError(PyminshareError, ValueError):
    """Invalid probability masses, unknown variables or malformed distribution files."""


class UnsupportedOrderError(PyminshareError, ValueError):
    """Entropy order not admissible for the requested measure."""


class FieldError(PyminshareError, ValueError):
    """Prime field misuse: bad modulus, mixed fields, bad interpolation points."""


class FieldInversionError(FieldError, ZeroDivisionError):
    """Inversion of the zero element."""


class AccessStructureError(PyminshareError, ValueError):
    """Access structure is not a partition of the party subsets or is malformed."""


class NonMonotoneError(AccessStructureError):
    """Operation requires a monotone access structure."""


class ParameterError(PyminshareError, ValueError):
    """Scheme parameters out of range, or enumeration too large."""


class NotQualifiedError(PyminshareError):
    """The supplied parties do not form a qualified set."""
