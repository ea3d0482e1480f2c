"""Exception hierarchy shared by all nasharc modules."""

from __future__ import annotations


class NashArcError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NashArcError):
    """Input data violates a documented precondition or schema."""


class SingularMatrixError(NashArcError):
    """An exact inverse or solve was requested for a singular matrix."""


class InternalInvariantError(NashArcError):
    """A cross-check that should hold by theorem failed; indicates a bug."""


class KnowledgeBaseError(NashArcError):
    """The verdict store file is unreadable or malformed."""


class KnowledgeBaseConflict(KnowledgeBaseError):
    """An attempt was made to record a verdict that contradicts a stored one."""
