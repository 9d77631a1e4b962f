"""Exception types raised across the package."""


class SchubsingError(ValueError):
    """Base class for all errors raised by this package."""


class PermutationError(SchubsingError):
    """Malformed permutation input (bad text, not a bijection, empty)."""


class SizeMismatchError(SchubsingError):
    """Two permutations that must live in the same S_n do not."""


class PreconditionError(SchubsingError):
    """An operation was called outside its domain (e.g. v not below w)."""


class OracleCapError(SchubsingError):
    """An exhaustive computation was requested above the configured size cap."""


class SurgeryError(RuntimeError):
    """Post-check of a diagram surgery failed; signals a detector bug."""
