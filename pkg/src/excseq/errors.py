"""Typed error hierarchy separating bad input from broken invariants."""


class ExcseqError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ExcseqError):
    """Invalid caller-supplied data (bad type tag, object out of range, ...)."""


class UnsupportedFeatureError(ExcseqError):
    """The operation needs a simply-laced diagram; valued types only count."""


class InternalConsistencyError(ExcseqError):
    """A structural invariant failed.  Indicates a bug, not bad input."""


class VerificationError(ExcseqError):
    """An identity that is supposed to hold did not survive checking."""
