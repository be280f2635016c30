"""Exception hierarchy shared across the package.

InputError covers malformed or out-of-contract inputs (CLI exit code 2).
VerificationError covers inputs that are well formed but fail a
mathematical validation (CLI exit code 1).  InternalInconsistencyError
signals a state the underlying theorems rule out for valid inputs.
"""


class FusionbenchError(Exception):
    pass


class InputError(FusionbenchError):
    """Malformed input: bad indices, duplicate labels, unparsable files."""


class CapExceededError(InputError):
    """An exhaustive check was requested beyond its documented size cap."""


class OverflowLimitError(InputError):
    """A structure constant left the 64-bit unsigned range."""


class VerificationError(FusionbenchError):
    """A validation failed; carries the full report when available."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParameterError(VerificationError):
    """Constructor parameters violate a named lifting condition."""


class NumericError(FusionbenchError):
    """A numerical routine failed to converge."""


class InternalInconsistencyError(FusionbenchError):
    """Data contradicts a theorem; indicates an invalid input object."""
