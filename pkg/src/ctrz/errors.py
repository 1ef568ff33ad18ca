"""Exception types shared across the package.

The command line maps these to exit codes: InputError to 2,
InconsistencyError to 3.  Validation findings are ordinary return
values, not exceptions, and map to exit 1.
"""


class CtrzError(Exception):
    """Base class for errors raised by this package."""


class InputError(CtrzError):
    """Malformed input: bad cycle text, bad JSON, degree mismatch, caps."""


class InconsistencyError(CtrzError):
    """Internal cross-check failed.  Signals a bug or corrupted data,
    never a legitimate run state."""
