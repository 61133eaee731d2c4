"""Exception types shared across the package."""


class SupergraphError(Exception):
    """Base class for all errors raised by this package."""


class NotAGroup(SupergraphError):
    """A multiplication table fails one of the group axioms.

    ``witness`` carries the offending data: a triple (i, j, k) for an
    associativity failure, or a row/column index for a Latin-square failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidParameter(SupergraphError):
    """A constructor or operation precondition on a parameter is violated."""


class SizeMismatch(SupergraphError):
    """Two objects that must share a ground size (or dimension) do not."""


class ArityMismatch(SupergraphError):
    """A generalized join received a part list of the wrong length."""


class NotSymmetric(SupergraphError):
    """A matrix handed to the symmetric eigensolver is not symmetric."""


class NoConvergence(SupergraphError):
    """The eigensolver failed to converge; ``residual`` is the final off-norm."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NoSignChange(SupergraphError):
    """A root bracket does not exhibit a sign change; ``interval`` is (lo, hi)."""

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class CanonicalAmbiguity(SupergraphError):
    """Canonical ordering search space is too large to resolve exhaustively."""


class OutOfRange(SupergraphError):
    """Claim parameters fall outside the claim's validity range."""


class UnsupportedClosedForm(SupergraphError):
    """No closed-form spectrum is catalogued for the requested combination."""


class FormatError(SupergraphError):
    """A file or command-line specification could not be parsed."""
