"""Marginal and first-hitting-time laws of the Bernoulli walk.

Every function is defined on all indices and returns 0 where the event is
impossible (wrong parity, level out of reach).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .combinatorics import a_coeff
from .exceptions import DomainError

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse a literal of the form 'num/den'. Decimals are rejected."""
    m = _RATIONAL.match(text)
    if not m:
        raise DomainError(f"expected a rational literal num/den, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


@dataclass(frozen=True)
class WalkParams:
    """Step law of the walk: +1 with probability p, -1 with probability q."""

    p: Fraction

    def __post_init__(self):
        p = self.p
        if isinstance(p, str):
            p = parse_rational(p)
        elif isinstance(p, float) or not isinstance(p, (int, Fraction)):
            raise DomainError(f"p must be an exact rational, got {p!r}")
        p = Fraction(p)
        if not 0 < p < 1:
            raise DomainError(f"p must lie strictly between 0 and 1, got {p}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> Fraction:
        return 1 - self.p

    @property
    def pq(self) -> Fraction:
        return self.p * self.q

    def dual(self) -> "WalkParams":
        """Parameters of the negated walk (p and q exchanged)."""
        return WalkParams(self.q)


def prob_S(params: WalkParams, k: int, j: int) -> Fraction:
    """P{S_k = j}."""
    return _prob_S(params.p, k, j)


@lru_cache(maxsize=None)
def _prob_S(p: Fraction, k: int, j: int) -> Fraction:
    if k < 0 or abs(j) > k or (k - j) % 2:
        return Fraction(0)
    up = (k + j) // 2
    return comb(k, up) * p**up * (1 - p) ** (k - up)


def prob_tau(params: WalkParams, a: int, k: int) -> Fraction:
    """P{tau_a = k}, tau_a the first time k >= 1 with S_k = a."""
    if k <= 0:
        return Fraction(0)
    if a == 0:
        if k % 2:
            return Fraction(0)
        return 4 * a_coeff(k - 2) * params.pq ** (k // 2)
    return Fraction(abs(a), k) * prob_S(params, k, a)


def prob_tau0_with_sign(params: WalkParams, k: int) -> Fraction:
    """P{tau_0 = k, S_1 > 0}, which equals P{tau_0 = k, S_1 < 0}."""
    return prob_tau(params, 0, k) / 2


def prob_S_from(params: WalkParams, start: int, k: int, j: int) -> Fraction:
    """P{S_k = j} for the walk started at `start`."""
    return prob_S(params, k, j - start)
