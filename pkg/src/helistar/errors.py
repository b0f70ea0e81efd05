"""Exception types shared across the package.

The CLI maps these onto exit codes: parameter problems exit 2, empty results
exit 3, failed verification exits 1.
"""


class HelistarError(Exception):
    """Base class for all package errors."""


class ParameterError(HelistarError):
    """A band, offset triple, or option value violates its invariants."""


class NotACompoundError(HelistarError):
    """split_compound was called on a band with gcd(n, s) = 1."""


class MissingBandError(HelistarError):
    """An operation that needs strip/shift structure got a free offset triple."""


class WindowError(HelistarError):
    """A mesh window is too small for the requested check."""


class CatalogFormatError(HelistarError):
    """A catalog document failed to parse; the message names line and field."""
