"""Exception types shared across the package."""


class PhaseLabError(Exception):
    """Base class for all phaselab errors."""


class ZeroNorm(PhaseLabError):
    """State vector has (near-)zero norm and cannot be normalized."""


class DomainError(PhaseLabError):
    """Argument outside the mathematical domain of an operation."""


class DegenerateSpectrum(PhaseLabError):
    """Eigenvalue gap too small for a well-defined eigenbasis."""


class NotSpecialUnitary(PhaseLabError):
    """Matrix is not in SU(2) within tolerance."""


class OrthogonalStep(PhaseLabError):
    """Consecutive path states are orthogonal; the overlap product is undefined."""


class NotCyclic(PhaseLabError):
    """Schedule does not return the initial ray."""


class ParseError(PhaseLabError):
    """Malformed schedule text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(PhaseLabError):
    """Schedule text parsed but failed semantic validation."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
