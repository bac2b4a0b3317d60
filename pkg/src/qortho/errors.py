"""Exception types shared across the package."""


class QOrthoError(Exception):
    """Base class for all package errors."""


class DomainError(QOrthoError, ValueError):
    """A parameter lies outside its admissible range."""


class AdmissibilityError(DomainError):
    """A lower series parameter hits a pole (a factor 1 - b*q^k vanishes)."""


class NotAPolynomialError(QOrthoError):
    """Coefficient extraction was requested for a non-terminating series."""


class TruncationError(QOrthoError):
    """An infinite sum or product did not settle within the iteration cap."""


class DivergenceError(QOrthoError):
    """Series terms grow instead of decaying."""


class ConvergenceError(QOrthoError):
    """An iterative solver (QR, Aberth) failed to converge."""


class PencilSingularError(QOrthoError):
    """The lower-bidiagonal matrix of the pencil is singular."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"pencil matrix B is singular at diagonal index {index}")


class PivotError(QOrthoError):
    """Forward recurrence hit a vanishing leading coefficient."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"recurrence pivot mu4({n}) vanishes; cannot advance")


class PairingError(QOrthoError):
    """Nonreal roots failed to pair into conjugates (numerical breakdown)."""
