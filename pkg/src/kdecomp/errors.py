"""Exception types shared across the package."""

from __future__ import annotations


class KdecompError(Exception):
    """Base class for all library errors."""


class ContextMismatchError(KdecompError):
    """Two values from different variable contexts were combined."""


class ImproperIdealError(KdecompError):
    """The unit ideal (or a generating set containing 1) was requested."""


class ZeroIdealError(KdecompError):
    """The zero ideal was passed to an operation that needs generators."""


class VoidComplexError(KdecompError):
    """The void complex {} has no faces; the requested convention is undefined."""


class NotAFaceError(KdecompError):
    """A vertex set that is not a face of the complex was used as one."""


class ImproperContractionError(KdecompError):
    """Contracting the vertex would produce an empty edge."""


class InvalidCertificateError(KdecompError):
    """A decomposition certificate failed independent re-verification."""


class BudgetExceededError(KdecompError):
    """A search or oracle exceeded its configured budget; result is undecided."""


class PropertyViolationError(KdecompError):
    """A theorem-backed identity failed on concrete data.

    Carries the offending report in ``report`` when one is available.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DocumentError(KdecompError):
    """An input document could not be parsed."""
