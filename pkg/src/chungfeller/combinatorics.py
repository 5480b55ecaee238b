"""Exact coefficients a_i, b_i over the even integers and their convolutions.

a_i = C(i, i/2) / (i + 2) and b_i = C(i, i/2) for even i >= 0. They are the
coefficients of 1 - sqrt(1 - 4z^2) and 1 / sqrt(1 - 4z^2) respectively.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .exceptions import DomainError


class CoeffIndex(int):
    """A nonnegative even integer. Construction rejects anything else."""

    def __new__(cls, i):
        if isinstance(i, bool) or int(i) != i:
            raise DomainError(f"index must be an integer, got {i!r}")
        i = int(i)
        if i < 0 or i % 2:
            raise DomainError(f"index must be even and >= 0, got {i}")
        return super().__new__(cls, i)


@lru_cache(maxsize=None)
def _central(i: int) -> int:
    return comb(i, i // 2)


def a_coeff(i: int) -> Fraction:
    """a_i = C(i, i/2)/(i+2) for even i."""
    i = CoeffIndex(i)
    return Fraction(_central(i), i + 2)


def b_coeff(i: int) -> Fraction:
    """b_i = C(i, i/2) = (i+2) a_i for even i."""
    i = CoeffIndex(i)
    return Fraction(_central(i))


@lru_cache(maxsize=None)
def a_conv_prefix(i: int, m: int) -> Fraction:
    """Partial convolution sum over even j <= m of a_j a_{i-j}.

    Used by the closed forms, which need every prefix up to j = i - c.
    Values of m above i are clipped, negative m give 0.
    """
    i = CoeffIndex(i)
    m = min(m, i)
    if m < 0:
        return Fraction(0)
    m -= m % 2
    total = Fraction(0)
    for j in range(0, m + 1, 2):
        total += a_coeff(j) * a_coeff(i - j)
    return total


def convolution_check(i: int) -> tuple[Fraction, Fraction]:
    """Return (sum_j a_j a_{i-j}, sum_j a_j b_{i-j}) over even j <= i.

    The first equals a_{i+2}/2 and the second b_{i+2}/4.
    """
    i = CoeffIndex(i)
    lhs_a = a_conv_prefix(i, i)
    lhs_b = sum((a_coeff(j) * b_coeff(i - j) for j in range(0, i + 1, 2)), Fraction(0))
    return lhs_a, lhs_b
