"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parse errors exit 2, size guards exit 3,
internal consistency failures exit 4.
"""


class CmprimesError(Exception):
    """Base class for all package errors."""


class ParseError(CmprimesError):
    """Malformed group description text."""


class UnsupportedSizeError(CmprimesError):
    """Input exceeds the enumeration limits this package supports."""


class InternalCheckError(CmprimesError):
    """A hard internal identity failed; indicates a bug, not bad input."""


class DegeneratePointError(CmprimesError):
    """The evaluation point collapsed the candidate system; retry with another."""
