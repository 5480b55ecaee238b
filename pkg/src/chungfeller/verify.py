"""Identity suites cross-checking the independent routes to r^F_{k,n}.

Each suite yields CheckResult records; a failed check carries the first
counterexample found.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .combinatorics import a_coeff, b_coeff, convolution_check
from .conditioning import Conditioning, all_conditionings
from .oracle import enumerate_paths, oracle_cap
from .exceptions import OracleCapError
from .series import (
    BiSeries,
    even_part_boundary_residuals,
    even_part_residual,
    gf_general,
    gf_master,
)
from .sojourn import (
    chung_feller_symmetric,
    mass_table,
    product_law_check,
    r_boundary,
    r_bridge,
    r_closed,
    r_free,
    r_pinned,
    r_signed,
    stitch_check,
)
from .walk_laws import WalkParams, prob_S, prob_tau

SUITES = ("routes", "identities", "oracle", "genfun")
HALF = WalkParams(Fraction(1, 2))


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    counterexample: str | None = None

    def line(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.suite}:{self.name}"
        return head if self.passed else f"{head}  first counterexample: {self.counterexample}"


def _first_failure(cases: Iterable[tuple[str, object, object]]) -> str | None:
    for label, lhs, rhs in cases:
        if lhs != rhs:
            return f"{label}: {lhs} != {rhs}"
    return None


def _check(suite: str, name: str, cases: Callable[[], Iterable]) -> CheckResult:
    bad = _first_failure(cases())
    return CheckResult(suite, name, bad is None, bad)


def suite_routes(ps: list[WalkParams], n_max: int) -> Iterator[CheckResult]:
    def cases():
        for P in ps:
            for n in range(n_max + 1):
                for c in all_conditionings(n):
                    a = mass_table(P, n, c).masses
                    b = mass_table(P, n, c, method="recursive").masses
                    yield f"p={P.p} n={n} {c}", a, b

    yield _check("routes", "closed=recursive", cases)


def suite_oracle(ps: list[WalkParams], n_max: int) -> Iterator[CheckResult]:
    cap = oracle_cap()
    if n_max > cap:
        raise OracleCapError(f"n_max={n_max} exceeds the enumeration cap {cap}")

    def cases():
        for P in ps:
            for n in range(n_max + 1):
                for c in all_conditionings(n):
                    yield f"p={P.p} n={n} {c}", enumerate_paths(P, n, c).masses, mass_table(P, n, c).masses

    yield _check("oracle", "closed=enumeration", cases)


def suite_genfun(ps: list[WalkParams], n_max: int) -> Iterator[CheckResult]:
    F, B, POS, NEG = Conditioning.FREE, Conditioning.BRIDGE, Conditioning.POSITIVE, Conditioning.NEGATIVE

    def coeffs():
        for P in ps:
            for c in all_conditionings(n_max):
                G = gf_master(P, c, n_max)
                for n in range(n_max + 1):
                    for k in range(n + 1):
                        yield f"p={P.p} {c} (k,n)=({k},{n})", G.coeff(k, n - k), r_closed(P, k, n, c)

    def general():
        for P in ps:
            for c in all_conditionings(n_max):
                yield f"p={P.p} {c}", gf_general(P, c, n_max), gf_master(P, c, n_max)

    def sums():
        for P in ps:
            lhs = gf_master(P, POS, n_max) + gf_master(P, NEG, n_max) + gf_master(P, B, n_max)
            yield f"p={P.p}", lhs, gf_master(P, F, n_max)

    def even():
        for P in ps:
            yield f"p={P.p}", even_part_residual(P, n_max), BiSeries.zero(n_max)
            rx, ry = even_part_boundary_residuals(P, n_max)
            yield f"p={P.p} x-slice", rx.is_zero(), True
            yield f"p={P.p} y-slice", ry.is_zero(), True

    yield _check("genfun", "coefficients=closed", coeffs)
    yield _check("genfun", "boundary-series-route=closed-form-route", general)
    yield _check("genfun", "G+ + G- + G0 = G", sums)
    yield _check("genfun", "even-part-factorization", even)


def suite_identities(ps: list[WalkParams], n_max: int) -> Iterator[CheckResult]:
    def total():
        for P in ps:
            for n in range(n_max + 1):
                for c in all_conditionings(n):
                    t = mass_table(P, n, c)
                    yield f"p={P.p} n={n} {c}", t.is_consistent(), True

    def decomposition():
        for P in ps:
            for n in range(n_max + 1):
                for k in range(n + 1):
                    free = r_free(P, k, n)
                    signed = r_signed(P, k, n, "+") + r_signed(P, k, n, "-") + r_bridge(P, k, n)
                    yield f"p={P.p} (k,n)=({k},{n}) signed", signed, free
                    pinned = sum((r_pinned(P, k, n, j) for j in range(-n, n + 1) if j), r_bridge(P, k, n))
                    yield f"p={P.p} (k,n)=({k},{n}) pinned", pinned, free

    def duality():
        for P in ps:
            D = P.dual()
            for n in range(n_max + 1):
                for k in range(n + 1):
                    yield f"p={P.p} (k,n)=({k},{n}) free", r_free(P, k, n), r_free(D, n - k, n)
                    yield f"p={P.p} (k,n)=({k},{n}) signed", r_signed(P, k, n, "+"), r_signed(D, n - k, n, "-")
                    for j in range(1, n + 1):
                        yield f"p={P.p} (k,n,j)=({k},{n},{j})", r_pinned(P, k, n, j), r_pinned(D, n - k, n, -j)

    def product():
        for P in ps:
            for n in range(0, n_max + 1, 2):
                for k in range(0, n + 1, 2):
                    lhs, rhs = product_law_check(P, k, n)
                    yield f"p={P.p} (k,n)=({k},{n})", lhs, rhs

    def stitch():
        for P in ps:
            for n in range(3, n_max + 1, 2):
                for k in range(1, n, 2):
                    lhs, rhs = stitch_check(P, k, n)
                    yield f"p={P.p} (k,n)=({k},{n})", lhs, rhs

    def bridge_uniform():
        for P in ps:
            for n in range(0, n_max + 1, 2):
                for k in range(0, n + 1, 2):
                    yield f"p={P.p} (k,n)=({k},{n})", r_bridge(P, k, n) / prob_S(P, n, 0), Fraction(2, n + 2)

    def symmetric():
        for n in range(0, n_max + 1, 2):
            for k in range(0, n + 1, 2):
                yield f"(k,n)=({k},{n})", chung_feller_symmetric(k, n), r_free(HALF, k, n)

    def boundary():
        for P in ps:
            for n in range(n_max + 1):
                yield f"p={P.p} r_0,{n}", r_boundary(P, n, "first"), r_free(P, 0, n)
                yield f"p={P.p} r_{n},{n}", r_boundary(P, n, "last"), r_free(P, n, n)
                if n >= 1:
                    yield f"p={P.p} r_1,{n}", r_boundary(P, n, "second"), r_free(P, 1, n)
                    yield f"p={P.p} r_{n - 1},{n}", r_boundary(P, n, "second_last"), r_free(P, n - 1, n)

    def positive_two():
        for P in ps:
            for n in range(2, n_max + 1):
                yield f"p={P.p} n={n}", r_signed(P, 2, n, "+"), P.p**2 * r_bridge(P, 0, n - 2)

    def convolutions():
        for i in range(0, 2 * n_max + 1, 2):
            yield f"i={i}", convolution_check(i), (a_coeff(i + 2) / 2, b_coeff(i + 2) / 4)

    def walk_laws():
        for P in ps:
            for n in range(n_max + 1):
                yield f"p={P.p} sum S_{n}", sum(prob_S(P, n, j) for j in range(-n, n + 1)), 1
            for n in range(2, n_max + 1, 2):
                ds = sum((prob_tau(P, 0, j) * prob_S(P, n - j, 0) for j in range(2, n + 1, 2)), Fraction(0))
                yield f"p={P.p} return decomposition n={n}", ds, prob_S(P, n, 0)
                t2 = sum((prob_tau(P, 1, j) * prob_tau(P, 1, n - j) for j in range(1, n, 2)), Fraction(0))
                yield f"p={P.p} tau_2 n={n}", t2, prob_tau(P, 2, n)
            for k in range(1, n_max + 1, 2):
                yield f"p={P.p} tau_1 k={k}", prob_tau(P, 1, k), prob_tau(P, 0, k + 1) / (2 * P.q)
                yield f"p={P.p} tau_-1 k={k}", prob_tau(P, -1, k), prob_tau(P, 0, k + 1) / (2 * P.p)

    for name, cases in [
        ("total-mass", total),
        ("decomposition", decomposition),
        ("duality", duality),
        ("product-law", product),
        ("stitch", stitch),
        ("bridge-uniform", bridge_uniform),
        ("symmetric", symmetric),
        ("boundary", boundary),
        ("positive-k2", positive_two),
        ("convolution", convolutions),
        ("walk-laws", walk_laws),
    ]:
        yield _check("identities", name, cases)


_RUNNERS = {
    "routes": suite_routes,
    "identities": suite_identities,
    "oracle": suite_oracle,
    "genfun": suite_genfun,
}


def run_suites(ps: list[WalkParams], n_max: int, suites: Iterable[str] = SUITES) -> list[CheckResult]:
    suites = list(suites)
    unknown = [s for s in suites if s not in _RUNNERS]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if "oracle" in suites and n_max > oracle_cap():
        raise OracleCapError(f"n_max={n_max} exceeds the enumeration cap {oracle_cap()}")
    out: list[CheckResult] = []
    for s in suites:
        out.extend(_RUNNERS[s](ps, n_max))
    return out
