"""Exhaustive census of flat idempotents at desk scale.

The general search fixes the normalized form (all-positive first column,
exactly u negatives per row) and walks rows depth-first, pruning each
partially-determined entry of B*B - k*B by the remaining +-1 slack and its
parity.  The rank-2 census instead enumerates ordered pairs of distinct
candidate rows plus the set of rows carrying the first type, which the
idempotence condition reduces to two exact subset sums.  Classes are
deduplicated by canonical representative either way.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations

from .canonical import canonical_rep, col_types, row_types, to_standard_form
from .construct import Rank2Params, enumerate_rank2_params, rank2_standard
from .core import SignMatrix
from .feasibility import InfeasibleTripleError, Triple, check_triple
from .verify import exact_rank, is_flat_idempotent

GENERAL_CAP = 6
RANK2_CAP = 12


@dataclass(frozen=True)
class CensusRecord:
    triple: Triple
    canonical: SignMatrix
    row_mult: tuple[int, ...]
    col_mult: tuple[int, ...]
    standard_params: Rank2Params | None
    raw_count: int


@dataclass(frozen=True)
class WorkItem:
    """An independent slice of the general search: all solutions whose first
    rows are the given candidate indices."""

    n: int
    k: int
    prefix: tuple[int, ...]


def row_candidates(n: int, k: int) -> list[tuple[int, ...]]:
    """Admissible rows of a normalized solution, in lexicographic order:
    leading +1 and exactly u = (n-k)/2 entries equal to -1."""
    u = (n - k) // 2
    out = []
    for negs in combinations(range(1, n), u):
        row = [1] * n
        for j in negs:
            row[j] = -1
        out.append(tuple(row))
    return out


def _check_census_args(n: int, k: int, cap: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds census cap {cap}")
    if (n - k) % 2 != 0 or k > n:
        raise InfeasibleTripleError(f"(n,k)=({n},{k}) admits no normalized solutions")


def _search_from_prefix(n: int, k: int, prefix: tuple[int, ...]):
    """All normalized solutions whose first rows are candidates[prefix[0]],
    candidates[prefix[1]], ...; yielded in DFS (candidate-index) order."""
    cands = row_candidates(n, k)
    rows: list[tuple[int, ...]] = []
    ps: list[list[int]] = []
    found: list[tuple[tuple[int, ...], ...]] = []

    def place(v: tuple[int, ...]) -> bool:
        # Row i := v.  Update partial sums ps[p][q] = sum_{j<=i} B[p][j]*B[j][q]
        # and prune any entry that can no longer reach k*B[p][q] with the
        # n-1-i remaining +-1 terms (magnitude or parity).
        i = len(rows)
        for p in range(i):
            rp, psp = rows[p][i], ps[p]
            for q in range(n):
                psp[q] += rp * v[q]
        rows.append(v)
        ps.append([sum(v[j] * rows[j][q] for j in range(i + 1)) for q in range(n)])
        rem = n - 1 - i
        for p in range(i + 1):
            row_p, psp = rows[p], ps[p]
            for q in range(n):
                diff = k * row_p[q] - psp[q]
                if diff < -rem or diff > rem or (diff - rem) % 2 != 0:
                    return False
        return True

    def unplace() -> None:
        v = rows.pop()
        ps.pop()
        i = len(rows)
        for p in range(i):
            rp, psp = rows[p][i], ps[p]
            for q in range(n):
                psp[q] -= rp * v[q]

    def rec() -> None:
        if len(rows) == n:
            found.append(tuple(rows))
            return
        for v in cands:
            if place(v):
                rec()
            unplace()

    ok = True
    for idx in prefix:
        if not place(cands[idx]):
            ok = False
            break
    if ok:
        rec()
    return found


def census_partition(n: int, k: int, cap: int = GENERAL_CAP) -> list[WorkItem]:
    """Split the general search by the first row's candidate value."""
    _check_census_args(n, k, cap)
    return [WorkItem(n, k, (i,)) for i in range(len(row_candidates(n, k)))]


def run_work_item(item: WorkItem) -> list[tuple[tuple[int, ...], ...]]:
    return _search_from_prefix(item.n, item.k, item.prefix)


def _classify_raws(n: int, k: int, raws) -> list[CensusRecord]:
    groups: dict[tuple, list] = {}
    for raw in raws:
        canon = canonical_rep(SignMatrix(raw, max_dim=None))
        entry = groups.setdefault(canon.rows, [canon, 0])
        entry[1] += 1
    records = []
    for canon, count in groups.values():
        r = exact_rank(canon)
        params = to_standard_form(canon, k).params if r == 2 else None
        records.append(
            CensusRecord(
                triple=Triple(n=n, k=k, r=r, m=(n - r * k) // 2, u=(n - k) // 2),
                canonical=canon,
                row_mult=row_types(canon).multiplicity,
                col_mult=col_types(canon).multiplicity,
                standard_params=params,
                raw_count=count,
            )
        )
    records.sort(key=lambda rec: (rec.triple.r, rec.canonical.rows))
    return records


def census_general(n: int, k: int, cap: int = GENERAL_CAP, jobs: int = 1) -> list[CensusRecord]:
    """Complete list of equivalence classes of n-by-n flat idempotents at
    scale k.  With jobs > 1 the partitioned work items run in worker
    processes; the merged result is identical to a sequential run."""
    _check_census_args(n, k, cap)
    if jobs > 1:
        items = census_partition(n, k, cap)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(run_work_item, items))
        raws = [raw for chunk in chunks for raw in chunk]
    else:
        raws = _search_from_prefix(n, k, ())
    return _classify_raws(n, k, raws)


def census_rank2(n: int, k: int, cap: int = RANK2_CAP) -> list[CensusRecord]:
    """Complete list of rank-2 classes via the two-row-type reduction.

    For rows r1 on index set I (containing row 0) and r2 elsewhere,
    B*B = k*B collapses to sum(r1[j] for j in I) = k and
    sum(r2[j] for j in I) = 0, since both rows already sum to k."""
    v = check_triple(n, k, 2)
    if not v.exists:
        raise InfeasibleTripleError(f"({n},{k},2) is not feasible: {v.reason}")
    if n > cap:
        raise ValueError(f"n={n} exceeds rank-2 census cap {cap}")
    cands = row_candidates(n, k)
    nsub = n - 1
    full_sub = (1 << nsub) - 1
    full_n = (1 << n) - 1
    cm = ((n - 2 * k) // 2 + 1) // 2

    # sums[c][msub] = sum of cands[c] over I = {0} + {j+1 : bit j of msub}
    sums = []
    for cand in cands:
        s = [0] * (1 << nsub)
        s[0] = cand[0]
        for msub in range(1, 1 << nsub):
            low = msub & -msub
            s[msub] = s[msub ^ low] + cand[low.bit_length()]
        sums.append(s)
    hits_k = [frozenset(m for m in range(1 << nsub) if s[m] == k) for s in sums]
    hits_0 = [frozenset(m for m in range(1 << nsub) if s[m] == 0) for s in sums]

    buckets: dict[tuple[int, int, int], int] = {}
    witnesses: dict[tuple[int, int, int], tuple] = {}
    for i1, r1 in enumerate(cands):
        for i2, r2 in enumerate(cands):
            if i1 == i2:
                continue
            valid = hits_k[i1] & hits_0[i2]
            if not valid:
                continue
            bmask = wmask = 0
            for j in range(n):
                if r1[j] == -1 and r2[j] == -1:
                    bmask |= 1 << j
                elif r1[j] == -1 and r2[j] == 1:
                    wmask |= 1 << j
            for msub in valid:
                if msub == full_sub:
                    continue
                i_set = (msub << 1) | 1
                t = (bmask & i_set).bit_count()
                q = (wmask & i_set).bit_count()
                l = cm - (bmask & (full_n ^ i_set)).bit_count()
                key = (t, q, l)
                buckets[key] = buckets.get(key, 0) + 1
                if key not in witnesses:
                    witnesses[key] = (r1, r2, i_set)

    admissible = set(enumerate_rank2_params(n, k))
    assert set(buckets) <= admissible, "search produced parameters outside the admissible range"
    for key, (r1, r2, i_set) in witnesses.items():
        mat = SignMatrix([r1 if (i_set >> i) & 1 else r2 for i in range(n)], max_dim=None)
        assert is_flat_idempotent(mat, k), f"witness for {key} fails idempotence"

    groups: dict[tuple, list] = {}
    for key in sorted(buckets):
        t, q, l = key
        _, mat = rank2_standard(n, k, t, q, l)
        canon = canonical_rep(mat)
        entry = groups.setdefault(canon.rows, [canon, 0])
        entry[1] += buckets[key]
    records = []
    for canon, count in groups.values():
        records.append(
            CensusRecord(
                triple=Triple(n=n, k=k, r=2, m=(n - 2 * k) // 2, u=(n - k) // 2),
                canonical=canon,
                row_mult=row_types(canon).multiplicity,
                col_mult=col_types(canon).multiplicity,
                standard_params=to_standard_form(canon, k).params,
                raw_count=count,
            )
        )
    records.sort(key=lambda rec: (rec.triple.r, rec.canonical.rows))
    return records


def record_to_dict(rec: CensusRecord) -> dict:
    return {
        "n": rec.triple.n,
        "k": rec.triple.k,
        "r": rec.triple.r,
        "m": rec.triple.m,
        "u": rec.triple.u,
        "canonical": rec.canonical.to_strings(),
        "row_mult": list(rec.row_mult),
        "col_mult": list(rec.col_mult),
        "standard_params": asdict(rec.standard_params) if rec.standard_params else None,
        "raw_count": rec.raw_count,
    }


def record_from_dict(d: dict) -> CensusRecord:
    params = Rank2Params(**d["standard_params"]) if d["standard_params"] else None
    return CensusRecord(
        triple=Triple(n=d["n"], k=d["k"], r=d["r"], m=d["m"], u=d["u"]),
        canonical=SignMatrix.from_strings(d["canonical"]),
        row_mult=tuple(d["row_mult"]),
        col_mult=tuple(d["col_mult"]),
        standard_params=params,
        raw_count=d["raw_count"],
    )


def records_to_text(records) -> str:
    """One JSON object per line, keys sorted: diff-able and streamable."""
    return "".join(
        json.dumps(record_to_dict(rec), sort_keys=True, separators=(",", ":")) + "\n"
        for rec in records
    )


def records_from_text(text: str) -> list[CensusRecord]:
    return [record_from_dict(json.loads(line)) for line in text.splitlines() if line.strip()]


def write_records(path, records) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(records_to_text(records))


def read_records(path) -> list[CensusRecord]:
    with open(path, encoding="utf-8") as fh:
        return records_from_text(fh.read())


def summarize(records) -> list[dict]:
    """Class and raw-solution counts per (n, k, r)."""
    agg: dict[tuple[int, int, int], list[int]] = {}
    for rec in records:
        entry = agg.setdefault(rec.triple.key(), [0, 0])
        entry[0] += 1
        entry[1] += rec.raw_count
    return [
        {"n": n, "k": k, "r": r, "classes": c, "raw": raw}
        for (n, k, r), (c, raw) in sorted(agg.items())
    ]
