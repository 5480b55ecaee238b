"""Exact law of the time a Bernoulli random walk spends above zero."""
from .conditioning import Conditioning
from .exceptions import DomainError, OracleCapError, SojournError
from .sojourn import (
    MassTable,
    limit_masses,
    mass_table,
    r_boundary,
    r_bridge,
    r_free,
    r_pinned,
    r_recursive,
    r_signed,
)
from .walk_laws import WalkParams

__all__ = [
    "Conditioning",
    "DomainError",
    "MassTable",
    "OracleCapError",
    "SojournError",
    "WalkParams",
    "limit_masses",
    "mass_table",
    "r_boundary",
    "r_bridge",
    "r_free",
    "r_pinned",
    "r_recursive",
    "r_signed",
]
