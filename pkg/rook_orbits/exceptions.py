"""
Exception types raised by rook_orbits.

Precondition violations on public operations raise ``ValueError``; the
types below mark conditions the CLI reports as hard failures.
"""


class RookOrbitsError(Exception):
    """Base class for rook_orbits errors."""


class ConsistencyError(RookOrbitsError):
    """An internal invariant failed (a bug, or a contradiction in the data)."""


class DataFileError(RookOrbitsError):
    """The F4 data file is missing, unreadable or invalid."""
