"""Constructors for every explicit family of absolutely flat idempotents:
the rank-1 canonical matrix, the 2x2 block family, and the full standard-form
rank-2 family parameterized by three free integers (t, q, l)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignMatrix
from .feasibility import InfeasibleTripleError, check_triple


@dataclass(frozen=True)
class Rank2Params:
    """Block data of a rank-2 standard form.

    Column blocks: a all-positive columns, b all-negative, then c columns of
    the mixed type v and c columns of -v.  The *_p/*_m fields split each row
    block into its v-positive and v-negative rows.  (t, q, l) are the free
    coordinates; everything else is derived from them and (n, k).
    """

    n: int
    k: int
    m: int
    a: int
    b: int
    c: int
    a_p: int
    a_m: int
    b_p: int
    b_m: int
    c1p: int
    c1m: int
    c2p: int
    c2m: int
    t: int
    q: int
    l: int

    @property
    def u(self) -> int:
        return self.b + self.c

    @property
    def x(self) -> int:
        """Row multiplicity anchor: the standard form has row multiset {x, n-x}."""
        return 2 * self.t + 2 * self.q + self.k

    @property
    def y(self) -> int:
        """Column multiplicity anchor: column multiset is {y, n-y}."""
        return self.k + 2 * ((self.m + 1) // 2) + 2 * self.t - 2 * self.l

    def validate(self) -> None:
        p = self
        fm, cm = p.m // 2, (p.m + 1) // 2
        checks = (
            p.n == 2 * p.k + 2 * p.m,
            p.a_p + p.a_m == p.a,
            p.b_p + p.b_m == p.b,
            p.c1p + p.c1m == p.c,
            p.c2p + p.c2m == p.c,
            p.a + p.b + 2 * p.c == p.n,
            p.a - p.b == p.k,
            p.b + p.c == (p.n - p.k) // 2,
            p.a_p == p.b_p + p.k // 2,
            p.c1p == p.c2p + p.k // 2,
            p.t == p.b_p,
            p.q == p.c2p,
            p.a_m == (p.n + 3) // 4 - p.l,
            p.b_m == cm - p.l,
            p.x == p.a_p + p.b_p + p.c1p + p.c2p,
            p.y == p.a + p.b,
            p.q + p.t - fm <= p.l <= cm,
        )
        if not all(checks):
            raise ValueError(f"inconsistent rank-2 parameters: {p}")
        if min(p.a_p, p.a_m, p.b_p, p.b_m, p.c1p, p.c1m, p.c2p, p.c2m) < 0:
            raise ValueError(f"negative block count in {p}")

    @classmethod
    def from_free(cls, n: int, k: int, t: int, q: int, l: int) -> "Rank2Params":
        v = check_triple(n, k, 2)
        if not v.exists:
            raise InfeasibleTripleError(f"({n},{k},2) is not feasible: {v.reason}")
        m = v.m
        fm, cm = m // 2, (m + 1) // 2
        if t < 0 or q < 0 or not (q + t - fm <= l <= cm):
            raise ValueError(f"(t,q,l)=({t},{q},{l}) outside the admissible range for m={m}")
        fn, cn = n // 4, (n + 3) // 4
        a_p, a_m = k // 2 + t, cn - l
        b_p, b_m = t, cm - l
        c1p, c1m = k // 2 + q, fm - q - t + l
        c2p, c2m = q, fn - q - t + l
        p = cls(
            n=n, k=k, m=m,
            a=a_p + a_m, b=b_p + b_m, c=c1p + c1m,
            a_p=a_p, a_m=a_m, b_p=b_p, b_m=b_m,
            c1p=c1p, c1m=c1m, c2p=c2p, c2m=c2m,
            t=t, q=q, l=l,
        )
        p.validate()
        return p


def rank1_canonical(n: int, k: int) -> SignMatrix:
    """The unique rank-1 solution for feasible (n, k, 1): all rows equal,
    with the last (n-k)/2 columns negative."""
    v = check_triple(n, k, 1)
    if not v.exists:
        raise InfeasibleTripleError(f"({n},{k},1) is not feasible: {v.reason}")
    row = (1,) * (n - v.m) + (-1,) * v.m
    return SignMatrix((row,) * n)


def pm_blocks(k: int) -> tuple[SignMatrix, SignMatrix]:
    """The 2x2 building blocks at scale k = 2t: k*P is all-ones and k*M has a
    negated second column.  Their products satisfy, at integer scale,
    (kP)^2 = 2(kP), (kP)(kM) = 2(kM), (kM)^2 = 0, (kM)(kP) = 0."""
    if k < 2 or k % 2 != 0:
        raise ValueError(f"k must be a positive even integer, got {k}")
    p = SignMatrix([[1, 1], [1, 1]])
    m = SignMatrix([[1, -1], [1, -1]])
    return p, m


def block_construction(n: int, k: int, r: int) -> SignMatrix:
    """Existence witness for any feasible even triple: an n/2-by-n/2 grid of
    2x2 blocks with r t-by-t diagonal super-blocks of P and an m-by-t strip
    of P in the lower-left corner; every other block is M."""
    if n % 2 != 0 or k % 2 != 0:
        raise InfeasibleTripleError(f"block construction needs even n and k, got ({n},{k})")
    v = check_triple(n, k, r)
    if not v.exists:
        raise InfeasibleTripleError(f"({n},{k},{r}) is not feasible: {v.reason}")
    half, t, m = n // 2, k // 2, v.m
    rows = []
    for bi in range(half):
        top, bot = [], []
        for bj in range(half):
            is_p = (bi // t == bj // t and bi < r * t) or (bi >= half - m and bj < t)
            top += [1, 1] if is_p else [1, -1]
            bot += [1, 1] if is_p else [1, -1]
        rows.append(top)
        rows.append(bot)
    return SignMatrix(rows)


def rank2_standard(n: int, k: int, t: int, q: int, l: int) -> tuple[Rank2Params, SignMatrix]:
    """Build the standard-form rank-2 idempotent for free coordinates (t, q, l).

    Column blocks are laid out (all-positive | all-negative | v | -v) and each
    row block lists its v-positive rows before its v-negative rows."""
    p = Rank2Params.from_free(n, k, t, q, l)
    plus_counts = (p.a_p, p.b_p, p.c1p, p.c2p)
    sizes = (p.a, p.b, p.c, p.c)
    row_plus = []
    for blk in range(4):
        row_plus += [pos < plus_counts[blk] for pos in range(sizes[blk])]
    rows = []
    for i in range(n):
        vi = 1 if row_plus[i] else -1
        rows.append((1,) * p.a + (-1,) * p.b + (vi,) * p.c + (-vi,) * p.c)
    return p, SignMatrix(rows)


def enumerate_rank2_params(n: int, k: int) -> list[tuple[int, int, int]]:
    """All admissible (t, q, l) for (n, k, 2), in lexicographic order."""
    v = check_triple(n, k, 2)
    if not v.exists:
        raise InfeasibleTripleError(f"({n},{k},2) is not feasible: {v.reason}")
    m = v.m
    fm, cm = m // 2, (m + 1) // 2
    out = []
    for t in range(m + 1):
        for q in range(m - t + 1):
            for l in range(q + t - fm, cm + 1):
                out.append((t, q, l))
    return out


def construct_for_triple(n: int, k: int, r: int) -> SignMatrix:
    """Default constructor choice: rank-1 canonical for r = 1, block matrix
    otherwise (feasible r >= 2 forces n and k even)."""
    if r == 1:
        return rank1_canonical(n, k)
    return block_construction(n, k, r)
