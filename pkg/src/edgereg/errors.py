"""Exception types shared across the package.

Exit-code mapping used by the CLI: usage/parse errors exit 2, resource caps
exit 3, verification failures exit 1.
"""


class EdgeRegError(Exception):
    """Base class for all package errors."""


class GraphFormatError(EdgeRegError):
    """Malformed graph input (edge list or graph6).

    Carries the offending position when known: ``line`` for edge lists,
    ``offset`` (byte index) for graph6 records.
    """

    def __init__(self, message, line=None, offset=None):
        super().__init__(message)
        self.line = line
        self.offset = offset


class ResourceCapError(EdgeRegError):
    """A configured resource cap was exceeded; the message names the cap."""


class VerificationFailure(EdgeRegError):
    """A verified claim failed; carries the report that triggered it."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
