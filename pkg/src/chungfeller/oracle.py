"""Ground truth by brute force: exhaustive path enumeration and Monte Carlo.

The enumeration applies the step-counting rule literally: step j counts
toward T_n when S_j > 0, or when S_j = 0 and S_{j-1} > 0.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from .conditioning import Conditioning
from .exceptions import DomainError, OracleCapError
from .sojourn import MassTable, endpoint_mass
from .walk_laws import WalkParams

DEFAULT_CAP = 16
HARD_CAP = 24
CHUNK = 1 << 16


def oracle_cap() -> int:
    """Enumeration cap: 16 unless SOJOURN_ORACLE_CAP says otherwise, never above 24."""
    raw = os.environ.get("SOJOURN_ORACLE_CAP")
    if not raw:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"SOJOURN_ORACLE_CAP must be an integer, got {raw!r}") from None
    return max(0, min(cap, HARD_CAP))


@dataclass(frozen=True)
class PathOutcome:
    """Sojourn time, endpoint and probability weight of a single path."""

    t: int
    endpoint: int
    weight: Fraction


def _step(s: int, step: int) -> tuple[int, int]:
    s_new = s + step
    if s_new == 0:
        # a visit to zero comes from +1 or -1, so the two cases below are exhaustive
        assert s in (-1, 1)
    delta = 1 if s_new > 0 or (s_new == 0 and s > 0) else 0
    return s_new, delta


def _walk(n: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, int]]:
    """Depth-first over all sign sequences extending `prefix`; yields (T_n, S_n)."""
    s = t = 0
    for step in prefix:
        s, d = _step(s, step)
        t += d
    stack = [(len(prefix), s, t)]
    while stack:
        depth, s, t = stack.pop()
        if depth == n:
            yield t, s
            continue
        for step in (-1, 1):
            s_new, d = _step(s, step)
            stack.append((depth + 1, s_new, t + d))


def _count_prefix(args) -> Counter:
    n, prefix = args
    return Counter(_walk(n, prefix))


@lru_cache(maxsize=None)
def _counts(n: int) -> tuple:
    return tuple(sorted(Counter(_walk(n)).items()))


def path_counts(n: int, jobs: int = 1, split: int = 4) -> dict[tuple[int, int], int]:
    """Number of paths of length n with each (T_n, S_n).

    With jobs > 1 the 2^split sign prefixes are enumerated in worker
    processes and the partial counts merged.
    """
    _guard(n)
    if jobs <= 1 or n <= split:
        return dict(_counts(n))
    prefixes = [tuple(1 if (b >> i) & 1 else -1 for i in range(split)) for b in range(1 << split)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(_count_prefix, [(n, pre) for pre in prefixes]):
            total.update(part)
    return dict(total)


def _guard(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    cap = oracle_cap()
    if n > cap:
        raise OracleCapError(f"enumeration of length {n} exceeds the cap {cap}")


def iter_paths(params: WalkParams, n: int) -> Iterator[PathOutcome]:
    """Every path of length n as a PathOutcome (2^n of them)."""
    _guard(n)
    p, q = params.p, params.q
    for t, s in _walk(n):
        up = (n + s) // 2
        yield PathOutcome(t, s, p**up * q ** (n - up))


def enumerate_paths(params: WalkParams, n: int, cond: Conditioning = Conditioning.FREE, jobs: int = 1) -> MassTable:
    """Law of T_n on {S_n in F} by summing over all 2^n paths."""
    counts = path_counts(n, jobs=jobs)
    p, q = params.p, params.q
    masses = [Fraction(0)] * (n + 1)
    for (t, s), c in counts.items():
        if cond.contains(s):
            up = (n + s) // 2
            masses[t] += c * p**up * q ** (n - up)
    return MassTable(n, cond, tuple(masses), endpoint_mass(params, n, cond))


@dataclass(frozen=True)
class EmpiricalTable:
    """Joint frequencies of {T_n = k, S_n in F} from a seeded simulation."""

    n: int
    cond: Conditioning
    frequencies: tuple
    retained: int
    trials: int
    seed: int


def _simulate_chunk(p: float, n: int, size: int, seed_seq: np.random.SeedSequence, cond: Conditioning):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    steps = np.where(rng.random((size, n)) < p, 1, -1).astype(np.int32)
    S = np.cumsum(steps, axis=1)
    prev = np.concatenate([np.zeros((size, 1), dtype=np.int32), S[:, :-1]], axis=1)
    delta = (S > 0) | ((S == 0) & (prev > 0))
    T = delta.sum(axis=1)
    keep = cond.mask(S[:, -1])
    return np.bincount(T[keep], minlength=n + 1), int(keep.sum())


def simulate(params: WalkParams, n: int, trials: int, seed: int, cond: Conditioning = Conditioning.FREE) -> EmpiricalTable:
    """Monte Carlo estimate of r^F_{k,n}, k = 0..n.

    Trials are split into chunks of 2^16; chunk i draws from PCG64 seeded by
    the i-th child of SeedSequence(seed), so output depends only on
    (params, n, trials, seed, cond).
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if not 0 <= seed < 2**64:
        raise DomainError("seed must fit in 64 bits")
    if n == 0:
        hit = trials if cond.contains(0) else 0
        return EmpiricalTable(0, cond, (hit / trials,), hit, trials, seed)
    sizes = [CHUNK] * (trials // CHUNK) + ([trials % CHUNK] if trials % CHUNK else [])
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    counts = np.zeros(n + 1, dtype=np.int64)
    retained = 0
    p = float(params.p)
    for size, child in zip(sizes, children):
        c, r = _simulate_chunk(p, n, size, child, cond)
        counts += c
        retained += r
    freqs = tuple(float(c) / trials for c in counts)
    return EmpiricalTable(n, cond, freqs, retained, trials, seed)
