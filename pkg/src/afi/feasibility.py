"""Feasibility of (n, k, r) triples and the rank-2 class-count bounds.

A triple is elementarily feasible when n = r*k + 2m and n - k = 2u admit
nonnegative integer solutions; an absolutely flat idempotent exists iff
additionally n is even or r = 1.
"""

from __future__ import annotations

from dataclasses import dataclass


class InfeasibleTripleError(ValueError):
    """Raised when an operation requires a feasible triple and got none."""


@dataclass(frozen=True)
class Triple:
    """Parameters of an absolutely flat idempotent: size n, scale k, rank r,
    with m negative diagonal entries and u negatives per normalized row."""

    n: int
    k: int
    r: int
    m: int
    u: int

    def key(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.r)


REASONS = ("parity-fail", "rk-exceeds-n", "non-integer-m", "odd-n-rank-above-1", "ok")


@dataclass(frozen=True)
class FeasibilityVerdict:
    elementary_ok: bool
    exists: bool
    m: int | None
    u: int | None
    reason: str


def check_triple(n: int, k: int, r: int) -> FeasibilityVerdict:
    """Decide existence for (n, k, r).  Total on positive inputs; the reason
    field names the first failed condition (parity, then r*k <= n, then
    integrality of m, then the odd-size rank restriction)."""
    if n < 1 or k < 1 or r < 1:
        raise ValueError("n, k, r must be positive")
    u = (n - k) // 2 if (n - k) % 2 == 0 and k <= n else None
    m = (n - r * k) // 2 if (n - r * k) % 2 == 0 and r * k <= n else None
    elementary_ok = m is not None and u is not None
    exists = elementary_ok and (n % 2 == 0 or r == 1)
    if (n - k) % 2 != 0:
        reason = "parity-fail"
    elif r * k > n:
        reason = "rk-exceeds-n"
    elif (n - r * k) % 2 != 0:
        reason = "non-integer-m"
    elif not exists:
        reason = "odd-n-rank-above-1"
    else:
        reason = "ok"
    return FeasibilityVerdict(elementary_ok, exists, m, u, reason)


def feasible_triples(n_max: int) -> list[Triple]:
    """All triples with n <= n_max for which a flat idempotent exists,
    sorted by (n, k, r).  Includes the degenerate (1,1,1)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            for r in range(1, n // k + 1):
                v = check_triple(n, k, r)
                if v.exists:
                    out.append(Triple(n, k, r, v.m, v.u))
    return out


@dataclass(frozen=True)
class CountBounds:
    """Bounds on the number N of inequivalent (n, k, 2) flat idempotents.
    exact is filled only when lower == upper; otherwise a census pins N."""

    lower: int
    upper: int
    exact: int | None


def rank2_bounds(n: int, k: int) -> CountBounds:
    """Class-count bounds for rank 2, driven by f = floor(m/2):
    lower = C(f+2, 2), upper = lower + f(f+1)(f+2)/6."""
    v = check_triple(n, k, 2)
    if not v.exists:
        raise InfeasibleTripleError(f"({n},{k},2) is not feasible: {v.reason}")
    f = v.m // 2
    lower = (f + 2) * (f + 1) // 2
    upper = f * (f + 1) * (f + 2) // 6 + lower
    return CountBounds(lower, upper, lower if lower == upper else None)
