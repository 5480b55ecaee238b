"""Truncated power series with exact rational coefficients, and the
generating functions of the sojourn-time masses built from them.

Bivariate series are truncated by total degree: the coefficient of
x^k y^m is kept when k + m <= order, so the full law of T_n (n = k + m) is
available for every n <= order.
"""
from __future__ import annotations

import csv
from fractions import Fraction
from typing import Iterable, TextIO

from .combinatorics import a_coeff, b_coeff
from .conditioning import Conditioning
from .exceptions import DomainError
from .sojourn import endpoint_mass
from .walk_laws import WalkParams, prob_S, prob_tau

_ZERO = Fraction(0)


def _frac(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("series coefficients must be exact")
    return Fraction(c)


class UniSeries:
    """c_0 + c_1 z + ... + c_order z^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("order must be >= 0")
        cs = cs[: order + 1] + [_ZERO] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "UniSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "UniSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, c=1) -> "UniSeries":
        cs = [0] * (order + 1)
        if degree <= order:
            cs[degree] = c
        return cls(cs, order)

    @classmethod
    def geometric(cls, order: int) -> "UniSeries":
        """1/(1-z)."""
        return cls([1] * (order + 1), order)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            return _ZERO
        if i > self.order:
            raise IndexError(f"coefficient {i} lies beyond order {self.order}")
        return self.coeffs[i]

    def __repr__(self):
        return f"UniSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise DomainError("cannot raise the truncation order")
        return UniSeries(self.coeffs[: order + 1], order)

    def _align(self, other: "UniSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, UniSeries):
            other = UniSeries.one(self.order).scale(other)
        o = self._align(other)
        return UniSeries([self.coeffs[i] + other.coeffs[i] for i in range(o + 1)], o)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "UniSeries":
        c = _frac(c)
        return UniSeries([c * x for x in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, UniSeries):
            return self.scale(other)
        o = self._align(other)
        out = [_ZERO] * (o + 1)
        for i, a in enumerate(self.coeffs[: o + 1]):
            if a:
                for j in range(o + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return UniSeries(out, o)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers are not supported")
        out = UniSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift_down(self, d: int = 1) -> "UniSeries":
        """Divide by z^d; the first d coefficients must vanish."""
        if any(self.coeffs[:d]):
            raise DomainError("series is not divisible by z^d")
        return UniSeries(self.coeffs[d:], self.order - d)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


class BiSeries:
    """Sparse sum of c_{k,m} x^k y^m over k + m <= order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict | None = None, order: int = 0):
        if order < 0:
            raise DomainError("order must be >= 0")
        clean = {}
        for (k, m), c in (coeffs or {}).items():
            if k < 0 or m < 0:
                raise DomainError(f"negative exponent {(k, m)}")
            c = _frac(c)
            if c and k + m <= order:
                clean[(k, m)] = c
        self.coeffs = clean
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls({}, order)

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        return cls({(0, 0): 1}, order)

    @classmethod
    def from_x(cls, u: UniSeries, order: int | None = None) -> "BiSeries":
        order = u.order if order is None else min(order, u.order)
        return cls({(k, 0): u.coeffs[k] for k in range(order + 1)}, order)

    @classmethod
    def from_y(cls, u: UniSeries, order: int | None = None) -> "BiSeries":
        order = u.order if order is None else min(order, u.order)
        return cls({(0, m): u.coeffs[m] for m in range(order + 1)}, order)

    @classmethod
    def outer(cls, u: UniSeries, v: UniSeries, order: int) -> "BiSeries":
        """u(x) v(y) truncated at total degree `order`."""
        order = min(order, u.order, v.order)
        return cls(
            {(k, m): u.coeffs[k] * v.coeffs[m] for k in range(order + 1) for m in range(order + 1 - k)},
            order,
        )

    def coeff(self, k: int, m: int) -> Fraction:
        if k + m > self.order:
            raise IndexError(f"coefficient {(k, m)} lies beyond order {self.order}")
        return self.coeffs.get((k, m), _ZERO)

    def __repr__(self):
        return f"BiSeries({len(self.coeffs)} terms, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order: int) -> "BiSeries":
        if order > self.order:
            raise DomainError("cannot raise the truncation order")
        return BiSeries(self.coeffs, order)

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            other = BiSeries.one(self.order).scale(other)
        o = min(self.order, other.order)
        out = {key: c for key, c in self.coeffs.items() if sum(key) <= o}
        for key, c in other.coeffs.items():
            if sum(key) <= o:
                out[key] = out.get(key, _ZERO) + c
        return BiSeries(out, o)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BiSeries":
        c = _frac(c)
        return BiSeries({key: c * v for key, v in self.coeffs.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, UniSeries):
            raise TypeError("use mul_x or mul_y to multiply by a univariate series")
        if not isinstance(other, BiSeries):
            return self.scale(other)
        o = min(self.order, other.order)
        out: dict = {}
        for (k1, m1), c1 in self.coeffs.items():
            room = o - k1 - m1
            if room < 0:
                continue
            for (k2, m2), c2 in other.coeffs.items():
                if k2 + m2 <= room:
                    key = (k1 + k2, m1 + m2)
                    out[key] = out.get(key, _ZERO) + c1 * c2
        return BiSeries(out, o)

    def __rmul__(self, other):
        return self.scale(other)

    def mul_x(self, u: UniSeries) -> "BiSeries":
        """Multiply by u(x) without building the bivariate lift."""
        o = min(self.order, u.order)
        out: dict = {}
        for (k, m), c in self.coeffs.items():
            for a in range(o - k - m + 1):
                b = u.coeffs[a]
                if b:
                    key = (k + a, m)
                    out[key] = out.get(key, _ZERO) + c * b
        return BiSeries(out, o)

    def mul_y(self, u: UniSeries) -> "BiSeries":
        """Multiply by u(y)."""
        return self.swap().mul_x(u).swap()

    def swap(self) -> "BiSeries":
        """Exchange the roles of x and y."""
        return BiSeries({(m, k): c for (k, m), c in self.coeffs.items()}, self.order)

    def slice_x(self) -> UniSeries:
        """The series at y = 0, as a function of x."""
        return UniSeries([self.coeffs.get((k, 0), _ZERO) for k in range(self.order + 1)], self.order)

    def slice_y(self) -> UniSeries:
        """The series at x = 0, as a function of y."""
        return UniSeries([self.coeffs.get((0, m), _ZERO) for m in range(self.order + 1)], self.order)

    def reflect(self) -> "BiSeries":
        """G(-x, -y)."""
        return BiSeries({key: (-c if sum(key) % 2 else c) for key, c in self.coeffs.items()}, self.order)

    def even_part(self) -> "BiSeries":
        """(G(x, y) + G(-x, -y)) / 2: keeps the terms of even total degree."""
        return BiSeries({key: c for key, c in self.coeffs.items() if sum(key) % 2 == 0}, self.order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def rows(self) -> list[tuple[int, int, int, int]]:
        """(k, m, numerator, denominator) for every nonzero coefficient."""
        return [(k, m, c.numerator, c.denominator) for (k, m), c in sorted(self.coeffs.items())]

    def write_csv(self, fh: TextIO) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["k", "m", "numerator", "denominator"])
        w.writerows(self.rows())


# building blocks


def series_A(params: WalkParams, order: int) -> UniSeries:
    """sqrt(1 - 4pq z^2) = 1 - 4 sum_{i>=2 even} a_{i-2} (pq)^{i/2} z^i."""
    pq = params.pq
    cs = [_ZERO] * (order + 1)
    cs[0] = Fraction(1)
    for i in range(2, order + 1, 2):
        cs[i] = -4 * a_coeff(i - 2) * pq ** (i // 2)
    return UniSeries(cs, order)


def series_inv_A(params: WalkParams, order: int) -> UniSeries:
    """1 / sqrt(1 - 4pq z^2) = sum_{i even} b_i (pq)^{i/2} z^i."""
    pq = params.pq
    cs = [_ZERO] * (order + 1)
    for i in range(0, order + 1, 2):
        cs[i] = b_coeff(i) * pq ** (i // 2)
    return UniSeries(cs, order)


def inv_A_sum(params: WalkParams, order: int) -> BiSeries:
    """1 / (A(x) + A(y)) = sum_{i, j even} a_{i+j} (pq)^{(i+j)/2} x^i y^j."""
    pq = params.pq
    out = {}
    for i in range(0, order + 1, 2):
        for j in range(0, order - i + 1, 2):
            out[(i, j)] = a_coeff(i + j) * pq ** ((i + j) // 2)
    return BiSeries(out, order)


def gf_H(params: WalkParams, j: int, order: int) -> UniSeries:
    """sum_k P{S_k = j} z^k."""
    return UniSeries([prob_S(params, k, j) for k in range(order + 1)], order)


def gf_K(params: WalkParams, a: int, order: int) -> UniSeries:
    """sum_k P{tau_a = k} z^k."""
    return UniSeries([prob_tau(params, a, k) for k in range(order + 1)], order)


def gf_K_algebraic(params: WalkParams, a: int, order: int) -> UniSeries:
    """K_a rebuilt from A alone: 1 - A for a = 0, ((1 - A)/(2qz))^a for a > 0
    and ((1 - A)/(2pz))^{-a} for a < 0."""
    one_minus_A = 1 - series_A(params, order + 1)
    if a == 0:
        return one_minus_A.truncate(order)
    lead = params.q if a > 0 else params.p
    step = one_minus_A.shift_down(1).scale(Fraction(1) / (2 * lead))
    return step ** abs(a)


def gf_H_algebraic(params: WalkParams, j: int, order: int) -> UniSeries:
    """H_j rebuilt from A alone: K_j / A for j != 0 and 1 / A for j = 0."""
    inv = series_inv_A(params, order)
    if j == 0:
        return inv
    return inv * gf_K_algebraic(params, j, order)


def gf_H_cond(params: WalkParams, cond: Conditioning, start: int, order: int) -> UniSeries:
    """sum_k P_start{S_k in F} z^k."""
    return UniSeries([endpoint_mass(params, k, cond, start) for k in range(order + 1)], order)


# generating functions of r^F_{k,n}


def gf_master(params: WalkParams, cond: Conditioning, order: int) -> BiSeries:
    """G^F(x, y) = sum r^F_{k,n} x^k y^{n-k} from its closed form."""
    inv = inv_A_sum(params, order)
    A = series_A(params, order)
    geo = UniSeries.geometric(order)
    p, q = params.p, params.q
    kind = cond.kind
    if kind == "free":
        u = (A + (2 * p - 1)) * geo
        v = (A + (2 * q - 1)) * geo
        return inv.mul_x(u) + inv.mul_y(v)
    if kind == "bridge":
        return inv.scale(2)
    if kind == "positive":
        return inv.mul_x((A + UniSeries.monomial(1, order, 2 * p) - 1) * geo)
    if kind == "negative":
        return inv.mul_y((A + UniSeries.monomial(1, order, 2 * q) - 1) * geo)
    K = gf_K_algebraic(params, cond.j, order)
    return (inv.mul_x(K) if cond.j > 0 else inv.mul_y(K)).scale(2)


def gf_general(params: WalkParams, cond: Conditioning, order: int) -> BiSeries:
    """G^F from the boundary series alone:

        G = ([1 + A(x)] G(x, 0) + [1 + A(y)] G(0, y) - 2 1_F(0)) / (A(x) + A(y))

    with G(x, 0) = H_0 - K_{-1} H_{-1} and G(0, y) = H_0 - K_1 H_1, where
    H_i = sum_k P_i{S_k in F} z^k and K_a are first-passage generating
    functions. Valid for every conditioning, pinned ones included.
    """
    inv = inv_A_sum(params, order)
    one_plus_A = series_A(params, order) + 1
    H0 = gf_H_cond(params, cond, 0, order)
    gx = H0 - gf_K(params, -1, order) * gf_H_cond(params, cond, -1, order)
    gy = H0 - gf_K(params, 1, order) * gf_H_cond(params, cond, 1, order)
    out = inv.mul_x(one_plus_A * gx) + inv.mul_y(one_plus_A * gy)
    if cond.contains(0):
        out = out - inv.scale(2)
    return out


def gf_even_part(params: WalkParams, order: int) -> BiSeries:
    """(G(x, y) + G(-x, -y)) / 2 for the free walk."""
    G = gf_master(params, Conditioning.FREE, order)
    return BiSeries({key: (c + c2) / 2 for key, c, c2 in _pairs(G, G.reflect())}, order)


def _pairs(s: BiSeries, t: BiSeries):
    for key in set(s.coeffs) | set(t.coeffs):
        yield key, s.coeffs.get(key, _ZERO), t.coeffs.get(key, _ZERO)


def even_part_residual(params: WalkParams, order: int) -> BiSeries:
    """G~(x, y) - G~(x, 0) G~(0, y); the zero series when the factorization holds."""
    Ge = gf_even_part(params, order)
    return Ge - BiSeries.outer(Ge.slice_x(), Ge.slice_y(), order)


def even_part_boundary_residuals(params: WalkParams, order: int) -> tuple[UniSeries, UniSeries]:
    """G~(x, 0)(1 - 2p + A(x)) - 2q and G~(0, y)(1 - 2q + A(y)) - 2p."""
    Ge = gf_even_part(params, order)
    A = series_A(params, order)
    p, q = params.p, params.q
    rx = Ge.slice_x() * (A + (1 - 2 * p)) - 2 * q
    ry = Ge.slice_y() * (A + (1 - 2 * q)) - 2 * p
    return rx, ry
