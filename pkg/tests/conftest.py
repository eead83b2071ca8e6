"""Shared fixtures and independent oracles for the test suite."""

from fractions import Fraction
from itertools import combinations, product

import pytest

from afi import SignMatrix

# The two inequivalent (8,2,2) examples and the 4-row-type (8,2,3) example,
# all at integer scale k=2.
RANK2_PAIR_A_ROWS = [
    "+++++---",
    "++---+++",
    "+++++---",
    "+++++---",
    "+++++---",
    "+++++---",
    "+++++---",
    "++---+++",
]
RANK2_PAIR_B_ROWS = [
    "+++-++--",
    "+++---++",
    "+++---++",
    "+++---++",
    "+++-++--",
    "+++---++",
    "+++---++",
    "+++---++",
]
RANK3_EXTRA_TYPES_ROWS = [
    "+++++---",
    "+++++---",
    "+++++---",
    "+++++---",
    "++--+++-",
    "++-+++--",
    "+++-+-+-",
    "+++++---",
]


@pytest.fixture
def rank2_pair_a() -> SignMatrix:
    return SignMatrix.from_strings(RANK2_PAIR_A_ROWS)


@pytest.fixture
def rank2_pair_b() -> SignMatrix:
    return SignMatrix.from_strings(RANK2_PAIR_B_ROWS)


@pytest.fixture
def rank3_extra_types() -> SignMatrix:
    return SignMatrix.from_strings(RANK3_EXTRA_TYPES_ROWS)


def naive_product(rows_a, rows_b):
    """Textbook triple-loop product, independent of afi.core.multiply."""
    n = len(rows_a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = 0
            for t in range(n):
                acc += rows_a[i][t] * rows_b[t][j]
            out[i][j] = acc
    return out


def fraction_rank(rows) -> int:
    """Gaussian elimination over Fraction: the independent rank oracle."""
    m = [[Fraction(e) for e in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0])
    rank = 0
    for col in range(n_cols):
        piv = None
        for i in range(rank, n_rows):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, n_rows):
            factor = m[i][col] / m[rank][col]
            m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def fraction_det(rows) -> Fraction:
    m = [[Fraction(e) for e in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, n):
            factor = m[i][col] / m[col][col]
            m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
    return det


def minors_rank(rows) -> int:
    """Rank as the largest size of a nonvanishing square minor."""
    n = len(rows)
    for size in range(n, 0, -1):
        for rsel in combinations(range(n), size):
            for csel in combinations(range(n), size):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if fraction_det(sub) != 0:
                    return size
    return 0


def brute_force_idempotent_triples(n_max: int) -> set[tuple[int, int, int]]:
    """Every (n, k, rank) with a +-1 witness of B*B = k*B, by full enumeration.
    Only sane for n <= 3."""
    found = set()
    for n in range(1, n_max + 1):
        for entries in product((1, -1), repeat=n * n):
            rows = [entries[i * n:(i + 1) * n] for i in range(n)]
            prod = naive_product(rows, rows)
            for k in range(1, n + 1):
                if all(prod[i][j] == k * rows[i][j] for i in range(n) for j in range(n)):
                    found.add((n, k, fraction_rank(rows)))
    return found
