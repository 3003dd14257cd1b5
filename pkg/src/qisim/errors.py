"""Exception hierarchy.

Every error raised on purpose by the toolkit derives from :class:`QisimError`.
Input-validation problems also derive from :class:`ValueError`, so callers
that only care about "bad argument" can catch that.
"""


class QisimError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(QisimError, ValueError):
    """Operands have incompatible or unsupported dimensions."""


class CapacityError(QisimError, ValueError):
    """A requested object exceeds the configured size limit."""


class NotHermitianError(QisimError, ValueError):
    """An operator expected to be Hermitian is not."""


class NotNormalizedError(QisimError, ValueError):
    """A state or probability vector does not have unit norm / sum."""


class InvalidDensityError(QisimError, ValueError):
    """A matrix is not a valid density matrix (negative eigenvalue, bad trace)."""


class DegenerateRotationError(QisimError, ValueError):
    """The axis-change rotation is undefined for parallel/antiparallel axes."""


class ConditioningError(QisimError, ValueError):
    """Conditioning on an outcome of zero probability."""


class ProtocolAbort(QisimError):
    """A protocol cannot proceed, e.g. too few sifted key bits."""


class RegimeError(QisimError):
    """Parameters fall outside the regime where a numerical method is valid."""


class ConvergenceError(RegimeError):
    """A truncated-basis computation did not converge under cutoff doubling."""
