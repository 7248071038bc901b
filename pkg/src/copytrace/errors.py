"""Exception taxonomy shared by the engine, the CLI and the HTTP API.

Every error carries a stable machine-readable ``code`` so the CLI can map
it to an exit status and the API can map it to a JSON error body.
"""

from __future__ import annotations


class CopytraceError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class EmptyDocument(CopytraceError):
    """No sentence survives normalization."""

    code = "empty_document"


class EmptyPattern(CopytraceError):
    """Search was given an empty pattern."""

    code = "empty_pattern"


class EmptyNormalizedSentence(CopytraceError):
    """A sentence with an empty normalized form cannot be fingerprinted."""

    code = "empty_normalized_sentence"


class UnknownDocument(CopytraceError):
    """The referenced document id or name is not in the corpus."""

    code = "unknown_document"


class StorageFailure(CopytraceError):
    """Persisting or loading the index file failed; in-memory state is unchanged."""

    code = "storage_failure"


class ZeroTotal(CopytraceError):
    """Percentage over an empty document is undefined."""

    code = "zero_total"


class OutOfRange(CopytraceError):
    """Percentage outside [0, 100] cannot be classified."""

    code = "out_of_range"


class InvalidEncoding(CopytraceError):
    """Uploaded bytes are not valid UTF-8."""

    code = "invalid_encoding"
