"""Error taxonomy shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; all inherit from :class:`EntcertError` so the service layer can
map any library failure to a structured HTTP response.
"""


class EntcertError(Exception):
    """Base class for all entcert errors."""


class NonHermitianError(EntcertError):
    """Matrix violates the Hermitian symmetry tolerance."""


class NoConvergenceError(EntcertError):
    """Eigensolver exhausted its sweep budget."""


class NegativeEigenvalueError(EntcertError):
    """An eigenvalue lies below the PSD clamp band."""


class BadIndexError(EntcertError):
    """Subsystem index outside the valid range or duplicated."""


class NotNormalizedError(EntcertError):
    """State vector norm deviates from 1 beyond tolerance."""


class BadArityError(EntcertError):
    """Unsupported subsystem count."""


class DomainError(EntcertError):
    """Scalar argument or parameter outside its mathematical domain."""


class NotSortedError(EntcertError):
    """Sequence expected in nonincreasing order is not."""


class UnsupportedDomainError(EntcertError):
    """Measure requested outside its closed-form domain (e.g. convex roof)."""


class BadDimsError(EntcertError):
    """Operator dimensions incompatible with the requested operation."""


class BadPartitionError(EntcertError):
    """Bipartition inconsistent with the state's subsystems."""


class PreconditionFailedError(EntcertError):
    """A stated precondition of a bound does not hold for this state."""


class NoRootError(EntcertError):
    """Root finder found no root inside its bracket."""


class DegenerateValueError(EntcertError):
    """Input values degenerate for the requested solve (zero or saturated)."""


class BadSpecError(EntcertError):
    """Audit specification invalid for the chosen bound."""


class BadGridError(EntcertError):
    """Sweep grid specification invalid."""
