"""Exception hierarchy shared by the library and the CLI."""


class CycloError(Exception):
    """Base class for every error raised by :mod:`cyclopqr`."""


class InvalidArgument(CycloError, ValueError):
    pass


class NoInverseError(CycloError, ValueError):
    pass


class ResourceLimitError(CycloError):
    """A requested computation would exceed the configured degree cap."""


class ConsistencyError(CycloError):
    """An internal invariant failed (inexact division, overlapping chi branches, ...)."""
