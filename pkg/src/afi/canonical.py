"""Normalization, row/column type analysis, rank-2 standard-form reduction,
and a total canonical representative for the signed-permutation orbit.

The canonical representative is the lexicographically minimal matrix
(row-major, with -1 ordered before +1) reachable by signed-permutation
similarity and, optionally, transposition.  It is found by branch and
bound: fixing the image of position 0 forces all signature choices, after
which an ordered-partition refinement walks permutations row by row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignMatrix, SignedPermutation, apply_similarity, transpose
from .construct import Rank2Params
from .verify import exact_rank, is_flat_idempotent

# Canonical forms (and hence equivalence and census dedup) are supported up
# to the rank-2 census cap.
CANONICAL_CAP = 12


@dataclass(frozen=True)
class TypePartition:
    """Partition of row (or column) indices into classes of rows that are
    identical or negatives of each other.  Each representative is oriented
    so its leading entry is +1; member_signs record each member's
    orientation relative to its representative."""

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[tuple[int, ...], ...]
    member_signs: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def multiplicity(self) -> tuple[int, ...]:
        """Multiset of class sizes, largest first."""
        return tuple(sorted((len(c) for c in self.classes), reverse=True))


def _vector_types(vectors) -> TypePartition:
    by_rep: dict[tuple[int, ...], list[int]] = {}
    signs: dict[tuple[int, ...], list[int]] = {}
    for i, v in enumerate(vectors):
        v = tuple(v)
        rep = v if v[0] == 1 else tuple(-e for e in v)
        by_rep.setdefault(rep, []).append(i)
        signs.setdefault(rep, []).append(1 if v == rep else -1)
    order = sorted(by_rep, key=lambda rep: by_rep[rep][0])
    return TypePartition(
        classes=tuple(tuple(by_rep[rep]) for rep in order),
        representatives=tuple(order),
        member_signs=tuple(tuple(signs[rep]) for rep in order),
    )


def row_types(M: SignMatrix) -> TypePartition:
    return _vector_types(M.rows)


def col_types(M: SignMatrix) -> TypePartition:
    return _vector_types(zip(*M.rows))


def normalize(B: SignMatrix, k: int) -> tuple[SignMatrix, SignedPermutation]:
    """Move a positive diagonal entry to position (0, 0) by permutation
    similarity, then make the whole first column positive by signature
    similarity.  Returns the normalized matrix and the group element used."""
    if not is_flat_idempotent(B, k):
        raise ValueError("normalize requires a flat idempotent (positive trace)")
    n = B.n
    pivot = next(i for i in range(n) if B.rows[i][i] == 1)
    perm = list(range(n))
    perm[0], perm[pivot] = pivot, 0
    g_perm = SignedPermutation(tuple(perm), (1,) * n)
    shuffled = apply_similarity(B, g_perm)
    g_sign = SignedPermutation(tuple(range(n)), tuple(shuffled.rows[i][0] for i in range(n)))
    g = g_sign.compose(g_perm)
    out = apply_similarity(B, g)
    return out, g


@dataclass(frozen=True)
class StandardForm:
    matrix: SignMatrix
    params: Rank2Params
    x: int
    y: int


def to_standard_form(B: SignMatrix, k: int) -> StandardForm:
    """Reduce a rank-2 flat idempotent to standard form.

    After normalization the columns fall into all-positive, all-negative and
    a single mixed type v (oriented so v starts with +1); a permutation
    similarity sorts columns into (positive | negative | v | -v) blocks and,
    within each block, v-positive rows before v-negative rows."""
    B1, g1 = normalize(B, k)
    if exact_rank(B1) != 2:
        raise ValueError("standard form is defined for rank-2 idempotents only")
    n = B1.n
    cols = list(zip(*B1.rows))
    mixed = next(c for c in cols if len(set(c)) == 2)
    v = mixed if mixed[0] == 1 else tuple(-e for e in mixed)
    neg_v = tuple(-e for e in v)
    blocks: dict[int, list[int]] = {0: [], 1: [], 2: [], 3: []}
    for j, c in enumerate(cols):
        if len(set(c)) == 1:
            blocks[0 if c[0] == 1 else 1].append(j)
        elif c == v:
            blocks[2].append(j)
        elif c == neg_v:
            blocks[3].append(j)
        else:
            raise ValueError("more than one mixed column type: not a rank-2 idempotent")
    order = []
    splits = []
    for b in range(4):
        plus = [j for j in blocks[b] if v[j] == 1]
        minus = [j for j in blocks[b] if v[j] == -1]
        order += plus + minus
        splits.append((len(plus), len(minus)))
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    g2 = SignedPermutation(tuple(perm), (1,) * n)
    F = apply_similarity(B1, g2)
    (a_p, a_m), (b_p, b_m), (c1p, c1m), (c2p, c2m) = splits
    params = Rank2Params(
        n=n, k=k, m=(n - 2 * k) // 2,
        a=a_p + a_m, b=b_p + b_m, c=c1p + c1m,
        a_p=a_p, a_m=a_m, b_p=b_p, b_m=b_m,
        c1p=c1p, c1m=c1m, c2p=c2p, c2m=c2m,
        t=b_p, q=c2p, l=(((n - 2 * k) // 2 + 1) // 2) - b_m,
    )
    params.validate()
    return StandardForm(matrix=F, params=params, x=params.x, y=params.y)


def canonical_rep(M: SignMatrix, include_transpose: bool = True,
                  max_dim: int = CANONICAL_CAP) -> SignMatrix:
    """Lexicographically minimal matrix in the orbit of M under
    signed-permutation similarity (and transposition when included)."""
    if M.n > max_dim:
        raise ValueError(f"dimension {M.n} exceeds canonical cap {max_dim}")
    best = _lexmin_conjugate(M.rows, None)
    if include_transpose:
        best = _lexmin_conjugate(tuple(zip(*M.rows)), best)
    return SignMatrix(best, max_dim=None)


def _lexmin_conjugate(rows, best):
    """Min over signed-permutation conjugates of the given rows; an incumbent
    from a previous call prunes the search."""
    n = len(rows)
    dmin = min(rows[i][i] for i in range(n))
    for p in range(n):
        if rows[p][p] != dmin:
            continue
        # Row p is sent to position 0.  Making its off-diagonal all -1 is
        # forced for lex-minimality and pins every sign (up to a global
        # flip, which acts trivially).
        s = [-rows[p][q] for q in range(n)]
        s[p] = 1
        C = tuple(
            tuple(s[x] * s[y] * rows[x][y] for y in range(n))
            for x in range(n)
        )
        best = _perm_lexmin(C, p, best)
    return best


def _twins(C, p, p2) -> bool:
    # True when swapping indices p and p2 is an automorphism of C.
    if C[p][p] != C[p2][p2] or C[p][p2] != C[p2][p]:
        return False
    for z in range(len(C)):
        if z == p or z == p2:
            continue
        if C[p][z] != C[p2][z] or C[z][p] != C[z][p2]:
            return False
    return True


def _perm_lexmin(C, first, best):
    """Lex-min of C under permutation conjugation with position 0 fixed to
    `first`.  Cells of the ordered partition hold indices whose relative
    order is still free; each placed row refines them."""
    n = len(C)
    row0 = (C[first][first],) + (-1,) * (n - 1)
    if best is not None and row0 > best[0]:
        return best
    state = {"best": best}

    def rec(sigma, cells, out_rows):
        t = len(sigma)
        cur = state["best"]
        if cur is not None:
            for i in range(t):
                if out_rows[i] < cur[i]:
                    break
                if out_rows[i] > cur[i]:
                    return
        if t == n:
            cand = tuple(out_rows)
            if cur is None or cand < cur:
                state["best"] = cand
            return
        cell0 = cells[0]
        scored = []
        for p in cell0:
            prefix = [C[p][s] for s in sigma]
            prefix.append(C[p][p])
            segs = [sorted(C[p][q] for q in cell0 if q != p)]
            for cell in cells[1:]:
                segs.append(sorted(C[p][q] for q in cell))
            row = tuple(prefix + [e for seg in segs for e in seg])
            scored.append((row, p))
        rmin = min(row for row, _ in scored)
        survivors = []
        for row, p in scored:
            if row != rmin:
                continue
            if any(_twins(C, p, p2) for p2 in survivors):
                continue
            survivors.append(p)
        for p in survivors:
            new_cells = []
            rest = [q for q in cell0 if q != p]
            for cell in [rest] + cells[1:]:
                neg = [q for q in cell if C[p][q] == -1]
                pos = [q for q in cell if C[p][q] == 1]
                if neg:
                    new_cells.append(neg)
                if pos:
                    new_cells.append(pos)
            rec(sigma + [p], new_cells, out_rows + [rmin])

    rest = [i for i in range(n) if i != first]
    rec([first], [rest] if rest else [], [row0])
    return state["best"]
