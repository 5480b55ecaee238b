"""Limit laws of the rescaled sojourn time under a drift rho, and the
floating-point finite-N side used to check convergence.

The walk with p_N = 1/2 + rho/(2 sqrt N), observed over [Nt] steps and
scaled by 1/N, has a sojourn time converging to that of Brownian motion
with drift rho on [0, t]. Everything is built on

    phi(z) = exp(-rho^2 z / 2) z^{-3/2}  and its tail  int_sigma^inf phi.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .exceptions import DomainError

SQRT_2PI = math.sqrt(2 * math.pi)
EDGE = 1e-6
_QUAD = dict(epsabs=1e-13, epsrel=1e-12, limit=200)


@dataclass(frozen=True)
class LimitParams:
    rho: float
    t: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.rho):
            raise DomainError("rho must be finite")
        if not (self.t > 0 and math.isfinite(self.t)):
            raise DomainError(f"t must be a positive real, got {self.t}")


def phi(z: float, rho: float) -> float:
    return math.exp(-rho * rho * z / 2) * z**-1.5


def phi_tail(sigma: float, rho: float) -> float:
    """int_sigma^inf exp(-rho^2 z/2) z^{-3/2} dz in closed form.

    Equals 2/sqrt(sigma) exp(-rho^2 sigma/2) - sqrt(2 pi)|rho| erfc(|rho| sqrt(sigma/2)).
    The integrand depends on rho only through rho^2, hence |rho|.
    """
    if not sigma > 0:
        raise DomainError(f"sigma must be > 0, got {sigma}")
    r = abs(rho)
    return 2 / math.sqrt(sigma) * math.exp(-r * r * sigma / 2) - SQRT_2PI * r * math.erfc(r * math.sqrt(sigma / 2))


def phi_tail_quad(sigma: float, rho: float) -> float:
    """Quadrature reference for phi_tail.

    With z = sigma / w^2 the tail becomes int_0^1 (2/sqrt(sigma)) exp(-rho^2 sigma/(2 w^2)) dw,
    a smooth integrand on a finite interval.
    """
    if not sigma > 0:
        raise DomainError(f"sigma must be > 0, got {sigma}")
    c = rho * rho * sigma / 2

    def f(w):
        return math.exp(-c / (w * w)) if w > 0 else 0.0

    # purely relative tolerance: the tail can be far below any fixed epsabs
    val, _ = integrate.quad(f, 0.0, 1.0, epsabs=0.0, epsrel=1e-13, limit=200)
    return 2 / math.sqrt(sigma) * val


def _check_s(lp: LimitParams, s: float) -> None:
    if not 0 < s < lp.t:
        raise DomainError(f"s must lie in (0, t), got s={s}, t={lp.t}")
    if s < EDGE * lp.t or lp.t - s < EDGE * lp.t:
        raise DomainError(f"s={s} is too close to an edge of (0, {lp.t}) for a pointwise density")


def _density(rho: float, t: float, s: float) -> float:
    if rho >= 0:
        return (rho + phi_tail(s, rho) / (2 * SQRT_2PI)) * phi_tail(t - s, rho) / SQRT_2PI
    r = -rho
    return (r + phi_tail(t - s, rho) / (2 * SQRT_2PI)) * phi_tail(s, rho) / SQRT_2PI


def sojourn_density(lp: LimitParams, s: float) -> float:
    """Density at s of the time spent above zero by Brownian motion with drift rho on [0, t]."""
    _check_s(lp, s)
    return _density(lp.rho, lp.t, s)


def arcsine_density(t: float, s: float) -> float:
    return 1 / (math.pi * math.sqrt(s * (t - s)))


def sojourn_cdf(lp: LimitParams, s: float) -> float:
    """P{sojourn <= s}, integrating the density after s = t sin^2(theta)."""
    if s <= 0:
        return 0.0
    if s >= lp.t:
        return 1.0
    t, rho = lp.t, lp.rho

    def f(theta):
        u = t * math.sin(theta) ** 2
        if u <= 0 or u >= t:
            return 0.0
        # ds = 2 t sin cos dtheta; the product stays bounded at both edges
        return _density(rho, t, u) * 2 * t * math.sin(theta) * math.cos(theta)

    val, _ = integrate.quad(f, 0.0, math.asin(math.sqrt(s / t)), **_QUAD)
    return val


def _inner(rho: float, t: float, lo: float) -> float:
    """int_lo^t phi(u) phi_tail(t - u) du, with u = t - w^2 removing the edge singularity."""
    r = abs(rho)

    def g(w):
        u = t - w * w
        # 2 w phi_tail(w^2), written so that it is finite at w = 0
        tail = 4 * math.exp(-r * r * w * w / 2) - 2 * SQRT_2PI * r * w * math.erfc(r * w / math.sqrt(2))
        return phi(u, rho) * tail

    val, _ = integrate.quad(g, 0.0, math.sqrt(t - lo), **_QUAD)
    return val


def conditioned_density(lp: LimitParams, s: float, sign: str) -> float:
    """Density at s of the sojourn time jointly with {B_t < 0} (sign '-') or {B_t > 0} (sign '+')."""
    _check_s(lp, s)
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    rho, t = lp.rho, lp.t
    if sign == "-":
        drift, lo = max(-rho, 0.0), s
    else:
        drift, lo = max(rho, 0.0), t - s
    head = drift / SQRT_2PI * (phi_tail(lo, rho) - phi_tail(t, rho)) if drift else 0.0
    return head + _inner(rho, t, lo) / (4 * math.pi)


def total_sojourn_density(rho: float, s: float) -> float:
    """Density of the total time spent above zero over [0, inf); finite only for rho < 0."""
    if not s > 0:
        raise DomainError(f"s must be > 0, got {s}")
    if rho >= 0:
        return 0.0
    return -rho / SQRT_2PI * phi_tail(s, rho)


# finite-N side


def p_of_N(rho: float, N: int) -> float:
    """p_N = 1/2 + rho/(2 sqrt N); raises unless it lies in (0, 1)."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    p = 0.5 + rho / (2 * math.sqrt(N))
    if not 0 < p < 1:
        raise DomainError(f"p_N = {p} is not a probability; |rho| is too large for N={N}")
    return p


def alphas_float(pq: float, n: int) -> np.ndarray:
    """alpha_i = a_i (pq)^{i/2} for i = 0, 2, ..., <= n, via the ratio
    alpha_{i+2}/alpha_i = 4pq (i+1)/(i+4). Each term stays O(1) so the
    cumulative product neither overflows nor underflows early."""
    i = np.arange(0, n + 1, 2, dtype=float)
    ratio = np.ones(len(i))
    ratio[1:] = 4 * pq * (i[:-1] + 1) / (i[:-1] + 4)
    return 0.5 * np.cumprod(ratio)


def free_distribution_float(p: float, n: int) -> np.ndarray:
    """P{T_n = k}, k = 0..n, in double precision and O(n) operations.

    Rewrites each branch of the closed form: with P(m) the prefix sums of
    alpha over even indices <= m,
        sum_{c<=i<=n-2} (sum_{j<=i-c} a_j a_{i-j}) (pq)^{i/2+1}
          = pq sum_{c<=l<=n-2} alpha_l P(n-2-l),
    so both branches become suffix sums of precomputed arrays.
    """
    if not 0 < p < 1:
        raise DomainError("p must lie in (0, 1)")
    q = 1 - p
    pq = p * q
    al = np.zeros(n + 3)
    al[0 : n + 1 : 2] = alphas_float(pq, n)
    prefix = np.cumsum(al)
    U = np.cumsum(al[: n + 1][::-1])[::-1]
    w = np.zeros(n + 1)
    if n >= 2:
        l = np.arange(0, n - 1)
        w[: n - 1] = al[l] * prefix[n - 2 - l]
    V = np.cumsum(w[::-1])[::-1]
    k = np.arange(n + 1)
    out = np.where((n - k) % 2 == 0, 2 * p * U[n - k] - 4 * pq * V[n - k], 0.0)
    out += np.where(k % 2 == 0, 2 * q * U[k] - 4 * pq * V[k], 0.0)
    return out


@dataclass
class ConvergenceReport:
    rho: float
    t: float
    N: int
    n: int
    p_N: float
    rows: list = field(default_factory=list)

    @property
    def sup_gap(self) -> float:
        return max((r["gap"] for r in self.rows), default=0.0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "discrete_cdf", "limit_cdf", "gap"])
        for r in self.rows:
            w.writerow([repr(r["s"]), repr(r["discrete_cdf"]), repr(r["limit_cdf"]), repr(r["gap"])])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "t": self.t,
            "N": self.N,
            "n": self.n,
            "p_N": self.p_N,
            "sup_gap": self.sup_gap,
            "rows": self.rows,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def convergence_experiment(rho: float, t: float, N: int, grid) -> ConvergenceReport:
    """Compare P{T_[Nt] / N <= s} at p_N with the limiting CDF on a grid of s in (0, t)."""
    lp = LimitParams(rho, t)
    p = p_of_N(rho, N)
    grid = [float(s) for s in grid]
    if any(not 0 < s < t for s in grid):
        raise DomainError("grid points must lie in (0, t)")
    n = math.floor(N * t)
    cdf = np.cumsum(free_distribution_float(p, n))
    report = ConvergenceReport(rho, t, N, n, p)
    for s in grid:
        d = float(cdf[min(n, math.floor(N * s))])
        lim = sojourn_cdf(lp, s)
        report.rows.append({"s": s, "discrete_cdf": d, "limit_cdf": lim, "gap": abs(d - lim)})
    return report


def tail_sum(rho: float, N: int, k: int) -> float:
    """sum over even i >= k of a_i (p_N q_N)^{i/2}.

    The full series sums to (1 - |p - q|)/(4pq) = 1/(2 max(p, q)), so the tail
    is that total minus a finite head. Summing the tail directly is hopeless
    at rho = 0, where the terms decay only like i^{-3/2}.
    """
    p = p_of_N(rho, N)
    q = 1 - p
    if k <= 0:
        return 1 / (2 * max(p, q))
    head = alphas_float(p * q, k - 1).sum() if k >= 1 else 0.0
    return 1 / (2 * max(p, q)) - float(head)


def tail_sum_direct(rho: float, N: int, k: int, rtol: float = 1e-18) -> float:
    """The same tail summed term by term until terms drop below rtol * partial sum.

    Only practical when rho != 0 (geometric decay of (4 p_N q_N)^{i/2}).
    """
    p = p_of_N(rho, N)
    pq = p * (1 - p)
    if pq >= 0.25:
        raise DomainError("direct tail summation does not terminate at p = 1/2")
    if k % 2:
        k += 1
    # log alpha_k through lgamma, then the ratio recurrence
    log_a = math.lgamma(k + 1) - 2 * math.lgamma(k / 2 + 1) - math.log(k + 2)
    term = math.exp(log_a + (k / 2) * math.log(pq))
    total, i = 0.0, k
    while term > rtol * total or total == 0.0:
        total += term
        term *= 4 * pq * (i + 1) / (i + 4)
        i += 2
    return total


def tail_sum_asymptotic(rho: float, N: int, k: int, c1: float = 0.1, c2: float = 0.9) -> tuple[float, float, float]:
    """(lhs, rhs, rel_err) for the tail sum against sqrt(2/(pi N)) phi_tail(k/N, rho).

    The tail sum is in fact asymptotic to half of this rhs: each term is
    about sqrt(2/pi) i^{-3/2} exp(-rho^2 i/(2N)), and only even i contribute,
    giving (1/sqrt(2 pi N)) phi_tail(k/N, rho). rel_err therefore tends to
    1/2; see tail_sum_limit for the matching normalization.
    """
    if k % 2:
        raise DomainError(f"k must be even, got {k}")
    if not c1 * N <= k <= c2 * N:
        raise DomainError(f"k={k} must lie in [{c1}N, {c2}N] for N={N}")
    lhs = tail_sum(rho, N, k)
    rhs = math.sqrt(2 / (math.pi * N)) * phi_tail(k / N, rho)
    return lhs, rhs, abs(lhs - rhs) / abs(rhs)


def tail_sum_limit(rho: float, N: int, k: int) -> float:
    """(1/sqrt(2 pi N)) phi_tail(k/N, rho), the leading term of the tail sum."""
    return phi_tail(k / N, rho) / math.sqrt(2 * math.pi * N)
