"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: usage errors exit 2 (argparse),
DataError exits 3, ScorerError and its subclasses exit 4.
"""


class AnalogyError(Exception):
    """Base class for all package errors."""


class DataError(AnalogyError):
    """Malformed input data or violated dataset invariants."""


class ScorerError(AnalogyError):
    """Failure inside a sentence scorer."""


class TransportError(ScorerError):
    """Remote scorer could not be reached (retryable)."""


class ProtocolError(ScorerError):
    """Remote scorer answered with a malformed or mismatched payload."""
