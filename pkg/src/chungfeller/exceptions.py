class SojournError(Exception):
    """Base class for errors raised by this package."""


class DomainError(SojournError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class OracleCapError(SojournError, RuntimeError):
    """Exhaustive enumeration was asked for a walk length above the cap."""
