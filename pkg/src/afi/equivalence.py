"""Equivalence of flat idempotents under permutation/signature similarity
(and transposition), plus the two standard-form swap symmetries."""

from __future__ import annotations

from .canonical import StandardForm, canonical_rep, col_types, row_types
from .construct import rank2_standard
from .core import SignMatrix
from .verify import exact_rank


def are_equivalent(Ma: SignMatrix, Mb: SignMatrix, include_transpose: bool = True) -> bool:
    """True iff the canonical representatives agree.  Cheap invariants are
    compared first: rank, trace, type counts, then multiplicity multisets
    (as an unordered row/col pair when transposition is allowed)."""
    if Ma.n != Mb.n:
        raise ValueError("dimension mismatch")
    if exact_rank(Ma) != exact_rank(Mb):
        return False
    if Ma.trace() != Mb.trace():
        return False
    ra, ca = row_types(Ma), col_types(Ma)
    rb, cb = row_types(Mb), col_types(Mb)
    if include_transpose:
        if sorted((ra.count, ca.count)) != sorted((rb.count, cb.count)):
            return False
        if sorted((ra.multiplicity, ca.multiplicity)) != sorted((rb.multiplicity, cb.multiplicity)):
            return False
    else:
        if (ra.count, ca.count) != (rb.count, cb.count):
            return False
        if (ra.multiplicity, ca.multiplicity) != (rb.multiplicity, cb.multiplicity):
            return False
    return canonical_rep(Ma, include_transpose) == canonical_rep(Mb, include_transpose)


def _rebuild(n: int, k: int, t: int, q: int, l: int) -> StandardForm:
    params, mat = rank2_standard(n, k, t, q, l)
    return StandardForm(matrix=mat, params=params, x=params.x, y=params.y)


def swap_x(F: StandardForm) -> StandardForm:
    """Equivalent standard form with row anchor n-x and the same y.

    Realizes the permutation similarity that exchanges the v and -v column
    blocks (and the matching row blocks), expressed as a remap of the free
    coordinates."""
    p = F.params
    p.validate()
    fm, cm = p.m // 2, (p.m + 1) // 2
    return _rebuild(p.n, p.k, cm - p.l, fm - p.q - p.t + p.l, cm - p.t)


def swap_y(F: StandardForm) -> StandardForm:
    """Equivalent standard form with column anchor n-y and the same x.

    Realizes the signature similarity that flips every index where v is
    negative (mixed columns become constant and vice versa)."""
    p = F.params
    p.validate()
    fm, cm = p.m // 2, (p.m + 1) // 2
    return _rebuild(p.n, p.k, p.q, p.t, cm - fm + p.q + p.t - p.l)
