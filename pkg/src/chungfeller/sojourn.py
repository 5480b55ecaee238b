"""Exact law of the sojourn time T_n jointly with the endpoint condition.

r^F_{k,n} = P{T_n = k, S_n in F}, where T_n counts the steps j <= n with
S_j > 0, or with S_j = 0 and S_{j-1} > 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .combinatorics import a_coeff, a_conv_prefix
from .conditioning import Conditioning
from .exceptions import DomainError
from .walk_laws import WalkParams, prob_S, prob_tau

__all__ = [
    "Conditioning",
    "MassTable",
    "alpha",
    "chung_feller_symmetric",
    "endpoint_mass",
    "limit_masses",
    "mass_table",
    "product_law_check",
    "r_boundary",
    "r_bridge",
    "r_closed",
    "r_free",
    "r_pinned",
    "r_recursive",
    "r_signed",
    "stitch_check",
]


def _check_kn(k: int, n: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")


@lru_cache(maxsize=None)
def alpha(pq: Fraction, i: int) -> Fraction:
    """alpha_i = a_i (pq)^{i/2} for even i."""
    return a_coeff(i) * pq ** (i // 2)


def _branch(pq: Fraction, lead: Fraction, c: int, n: int, upper: int) -> Fraction:
    # 2*lead*sum_{c<=i<=upper} alpha_i - 4*sum_{c<=i<=n-2} conv(i, i-c) (pq)^{i/2+1}
    s1 = sum((alpha(pq, i) for i in range(c, upper + 1, 2)), Fraction(0))
    s2 = sum((a_conv_prefix(i, i - c) * pq ** (i // 2 + 1) for i in range(c, n - 1, 2)), Fraction(0))
    return 2 * lead * s1 - 4 * s2


def r_free(params: WalkParams, k: int, n: int) -> Fraction:
    """P{T_n = k} for the unconditioned walk."""
    _check_kn(k, n)
    pq = params.pq
    total = Fraction(0)
    if (n - k) % 2 == 0:
        total += _branch(pq, params.p, n - k, n, n)
    if k % 2 == 0:
        total += _branch(pq, params.q, k, n, n)
    return total


def r_signed(params: WalkParams, k: int, n: int, sign: str) -> Fraction:
    """P{T_n = k, S_n > 0} for sign '+', P{T_n = k, S_n < 0} for sign '-'."""
    _check_kn(k, n)
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    pq = params.pq
    if sign == "+":
        if (n - k) % 2:
            return Fraction(0)
        return _branch(pq, params.p, n - k, n, n - 1)
    if k % 2:
        return Fraction(0)
    return _branch(pq, params.q, k, n, n - 1)


def r_bridge(params: WalkParams, k: int, n: int) -> Fraction:
    """P{T_n = k, S_n = 0}: the same value 2 a_n (pq)^{n/2} for every even k."""
    _check_kn(k, n)
    if k % 2 or n % 2:
        return Fraction(0)
    return 2 * alpha(params.pq, n)


def r_pinned(params: WalkParams, k: int, n: int, j: int) -> Fraction:
    """P{T_n = k, S_n = j} for j != 0."""
    _check_kn(k, n)
    if j == 0:
        raise DomainError("pinned endpoint must be nonzero, use r_bridge")
    if j < 0:
        # the negated walk spends n - k steps above zero and ends at -j
        return r_pinned(params.dual(), n - k, n, -j)
    if j > k or (k - j) % 2 or (n - k) % 2:
        return Fraction(0)
    inner = Fraction(0)
    for i in range(j, k + 1, 2):
        inner += a_coeff(n - i) / i * comb(i, (i + j) // 2)
    p, q = params.p, params.q
    return 2 * j * inner * p ** ((n + j) // 2) * q ** ((n - j) // 2)


def r_boundary(params: WalkParams, n: int, which: str) -> Fraction:
    """Boundary masses of the free law.

    which: 'first' -> r_{0,n}, 'last' -> r_{n,n}, 'second' -> r_{1,n},
    'second_last' -> r_{n-1,n}.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    p, q, pq = params.p, params.q, params.pq
    if which in ("first", "last"):
        lead = p if which == "first" else q
        head = sum((alpha(pq, i) for i in range(0, n, 2)), Fraction(0))
        return 1 - 2 * lead * head
    if which in ("second", "second_last"):
        if n < 1:
            raise DomainError("r_{1,n} needs n >= 1")
        if n % 2 == 0:
            return Fraction(0)
        up, down = (n + 1) // 2, (n - 1) // 2
        if which == "second_last":
            up, down = down, up
        return 2 * a_coeff(n - 1) * p**up * q**down
    raise DomainError(f"unknown boundary {which!r}")


def endpoint_mass(params: WalkParams, n: int, cond: Conditioning, start: int = 0) -> Fraction:
    """P{S_n in F} for the walk started at `start`."""
    if cond.kind == "free":
        return Fraction(1)
    return sum(
        (prob_S(params, n, x - start) for x in range(start - n, start + n + 1, 2) if cond.contains(x)),
        Fraction(0),
    )


def r_closed(params: WalkParams, k: int, n: int, cond: Conditioning) -> Fraction:
    """Closed-form r^F_{k,n}, dispatching on the conditioning."""
    kind = cond.kind
    if kind == "free":
        return r_free(params, k, n)
    if kind == "bridge":
        return r_bridge(params, k, n)
    if kind == "positive":
        return r_signed(params, k, n, "+")
    if kind == "negative":
        return r_signed(params, k, n, "-")
    return r_pinned(params, k, n, cond.j)


# recurrence route


@lru_cache(maxsize=None)
def _rec_row(p: Fraction, cond: Conditioning, n: int) -> tuple[Fraction, ...]:
    params = WalkParams(p)
    q = params.q
    pi = [prob_tau(params, 0, j) for j in range(n + 2)]
    target = endpoint_mass(params, n, cond)
    if n == 0:
        return (target,)
    row = [Fraction(0)] * (n + 1)
    # k = 0: the walk must leave through -1 and never come back above zero
    s0 = sum((pi[j + 1] * endpoint_mass(params, n - j, cond, 1) for j in range(1, n + 1, 2)), Fraction(0))
    row[0] = target - s0 / (2 * q)
    sn = sum((pi[j + 1] * endpoint_mass(params, n - j, cond, -1) for j in range(1, n + 1, 2)), Fraction(0))
    row[n] = target - sn / (2 * params.p)
    prev = [_rec_row(p, cond, m) for m in range(n)]
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(2, k + 1, 2):
            acc += pi[j] * prev[n - j][k - j]
        for j in range(2, n - k + 1, 2):
            acc += pi[j] * prev[n - j][k]
        row[k] = acc / 2
    return tuple(row)


def r_recursive(params: WalkParams, k: int, n: int, cond: Conditioning) -> Fraction:
    """r^F_{k,n} from the first-return recurrence, by dynamic programming."""
    _check_kn(k, n)
    for m in range(n + 1):  # fill the cache bottom-up, keeps recursion shallow
        _rec_row(params.p, cond, m)
    return _rec_row(params.p, cond, n)[k]


# tables


@dataclass(frozen=True)
class MassTable:
    """Masses r^F_{k,n} for k = 0..n together with the total they must reach."""

    n: int
    cond: Conditioning
    masses: tuple
    total_target: Fraction

    def __post_init__(self):
        if len(self.masses) != self.n + 1:
            raise DomainError(f"expected {self.n + 1} masses, got {len(self.masses)}")

    def __getitem__(self, k: int):
        return self.masses[k]

    def __iter__(self) -> Iterator:
        return iter(self.masses)

    def __len__(self) -> int:
        return len(self.masses)

    def total(self):
        return sum(self.masses, Fraction(0))

    def is_consistent(self) -> bool:
        """Nonnegative masses summing exactly to the declared target."""
        return all(m >= 0 for m in self.masses) and self.total() == self.total_target

    def as_floats(self) -> list[float]:
        return [float(m) for m in self.masses]


def mass_table(params: WalkParams, n: int, cond: Conditioning = Conditioning.FREE, method: str = "closed") -> MassTable:
    """Distribution of T_n on {S_n in F}, by the closed forms or the recurrence."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if method == "closed":
        masses = tuple(r_closed(params, k, n, cond) for k in range(n + 1))
    elif method == "recursive":
        r_recursive(params, 0, n, cond)
        masses = _rec_row(params.p, cond, n)
    else:
        raise DomainError(f"unknown method {method!r}")
    return MassTable(n, cond, masses, endpoint_mass(params, n, cond))


# identities


def product_law_check(params: WalkParams, k: int, n: int) -> tuple[Fraction, Fraction]:
    """(r_{k,n}, r_{k,k} r_{0,n-k}) for even k <= n."""
    _check_kn(k, n)
    if k % 2 or n % 2:
        raise DomainError("product law needs k and n even")
    return r_free(params, k, n), r_free(params, k, k) * r_free(params, 0, n - k)


def stitch_check(params: WalkParams, k: int, n: int) -> tuple[Fraction, Fraction]:
    """(r_{k,n} + r_{k+1,n}, r_{k+1,n+1}) for odd k < n, n odd."""
    if k % 2 == 0 or n % 2 == 0:
        raise DomainError("stitch identity needs k and n odd")
    if not 0 < k <= n - 1:
        raise DomainError(f"stitch identity needs k <= n-1, got k={k}, n={n}")
    return r_free(params, k, n) + r_free(params, k + 1, n), r_free(params, k + 1, n + 1)


def chung_feller_symmetric(k: int, n: int) -> Fraction:
    """C(k, k/2) C(n-k, (n-k)/2) / 2^n, the law of T_n at p = 1/2."""
    _check_kn(k, n)
    if k % 2 or n % 2:
        return Fraction(0)
    return Fraction(comb(k, k // 2) * comb(n - k, (n - k) // 2), 2**n)


def limit_r0(params: WalkParams) -> Fraction:
    """lim r_{0,n} = (2 - 1/q)^+, the chance of never spending time above zero."""
    return max(Fraction(0), 2 - 1 / params.q)


def limit_masses(params: WalkParams, k: int) -> Fraction:
    """P{T_infinity = k}; identically 0 when p >= 1/2."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if params.p >= Fraction(1, 2) or k % 2:
        return Fraction(0)
    return r_boundary(params, k, "last") * limit_r0(params)
