"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Input violates a documented precondition (shape, domain, PSD, ...)."""


class DegenerateParameterError(InvalidInputError):
    """Parameter value at which the construction degenerates (lambda = 1)."""


class UnsupportedParametersError(InvalidInputError):
    """Parameters outside the region where an operation is defined."""


class NoCandidateError(InvalidInputError):
    """The orthogonal complement is zero-dimensional; no candidate state."""


class NumericInconsistencyError(ArithmeticError):
    """An internal cross-check failed beyond tolerance; likely a caller bug."""
