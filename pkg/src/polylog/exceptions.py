"""Exception types shared across the package."""


class PolylogError(Exception):
    """Base class for library errors."""


class DomainError(PolylogError):
    """Argument outside the supported domain (maps to CLI exit code 2)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class OrderGuardError(DomainError):
    """Order inside the integer guard band; an integer-limit routine must be used."""


class ConvergenceError(PolylogError):
    """A series or quadrature failed to reach its accuracy target."""
