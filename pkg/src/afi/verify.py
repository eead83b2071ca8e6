"""Exact verification: idempotence at scale k, integer rank, and the
structural measurements (trace, per-row negatives, diagonal negatives)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import SignMatrix, multiply
from .feasibility import Triple


def is_flat_idempotent(B: SignMatrix, k: int) -> bool:
    """True iff B @ B == k * B entrywise, exactly."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    prod = multiply(B, B)
    rows = B.rows
    return all(
        prod[i][j] == k * rows[i][j]
        for i in range(B.n)
        for j in range(B.n)
    )


def _rank_fraction(rows) -> int:
    """Plain Gaussian elimination over exact rationals (fallback path)."""
    m = [[Fraction(e) for e in r] for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        for i in range(rank + 1, nr):
            f = m[i][col] * inv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def integer_rank(rows) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free
    (Bareiss) elimination.  Divisions are exact by construction; if a
    non-exact division ever appears the rational path takes over."""
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nr):
            f = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, nc):
                num = row_i[j] * p - f * row_r[j]
                if num % prev:
                    return _rank_fraction(rows)
                row_i[j] = num // prev
            row_i[col] = 0
        prev = p
        rank += 1
    return rank


def exact_rank(M: SignMatrix) -> int:
    return integer_rank(M.rows)


@dataclass(frozen=True)
class VerifyReport:
    is_idempotent: bool
    rank: int
    trace: int
    row_negative_counts: tuple[int, ...]
    diag_negative_count: int
    inferred_triple: Triple | None


def full_report(B: SignMatrix, k: int) -> VerifyReport:
    """Measure everything at once.  The triple is inferred only for genuine
    idempotents: r = trace/k, m from the diagonal (a similarity invariant),
    u = (n-k)/2."""
    n = B.n
    idem = is_flat_idempotent(B, k)
    rank = exact_rank(B)
    trace = B.trace()
    row_negs = tuple(sum(1 for e in r if e == -1) for r in B.rows)
    diag_negs = sum(1 for i in range(n) if B.rows[i][i] == -1)
    inferred = None
    if idem:
        inferred = Triple(n=n, k=k, r=trace // k, m=diag_negs, u=(n - k) // 2)
    return VerifyReport(idem, rank, trace, row_negs, diag_negs, inferred)
