"""Constructor families: rank-1 canonical, 2x2 blocks, rank-2 standard form."""

import pytest

from afi import (
    InfeasibleTripleError,
    Rank2Params,
    SignMatrix,
    block_construction,
    construct_for_triple,
    enumerate_rank2_params,
    exact_rank,
    feasible_triples,
    is_flat_idempotent,
    multiply,
    pm_blocks,
    rank1_canonical,
    rank2_standard,
    row_types,
)
from conftest import fraction_rank, naive_product

KP_ROWS = ((1, 1), (1, 1))
KM_ROWS = ((1, -1), (1, -1))


def test_rank1_three_one():
    m = rank1_canonical(3, 1)
    assert m.rows == ((1, 1, -1),) * 3


def test_rank1_full_scale_is_all_ones():
    for n in (1, 4, 7):
        m = rank1_canonical(n, n)
        assert all(e == 1 for row in m.rows for e in row)


def test_rank1_five_three_dot_product():
    m = rank1_canonical(5, 3)
    assert m.rows[0] == (1, 1, 1, 1, -1)
    prod = naive_product(m.rows, m.rows)
    assert all(prod[i][j] == 3 * m.rows[i][j] for i in range(5) for j in range(5))
    assert fraction_rank(m.rows) == 1


def test_rank1_rejects_infeasible():
    with pytest.raises(InfeasibleTripleError):
        rank1_canonical(6, 3)
    with pytest.raises(InfeasibleTripleError):
        rank1_canonical(3, 5)


def test_pm_blocks_values_and_relations():
    for k in (2, 4, 6, 8):
        kp, km = pm_blocks(k)
        assert kp.rows == KP_ROWS and km.rows == KM_ROWS
        zero = ((0, 0), (0, 0))
        assert multiply(km, km) == zero
        assert multiply(km, kp) == zero
        assert multiply(kp, kp) == ((2, 2), (2, 2))
        assert multiply(kp, km) == ((2, -2), (2, -2))


def test_pm_blocks_reject_odd():
    with pytest.raises(ValueError):
        pm_blocks(3)
    with pytest.raises(ValueError):
        pm_blocks(0)


def test_block_eight_two_three_matches_display():
    # r=3 diagonal P blocks plus one P strip at the bottom left, M elsewhere.
    kp, km = pm_blocks(2)
    grid = [
        [kp, km, km, km],
        [km, kp, km, km],
        [km, km, kp, km],
        [kp, km, km, km],
    ]
    expected = []
    for brow in grid:
        for sub in range(2):
            expected.append(tuple(e for blk in brow for e in blk.rows[sub]))
    assert block_construction(8, 2, 3).rows == tuple(expected)


def test_block_smallest_case():
    assert block_construction(2, 2, 1).rows == ((1, 1), (1, 1))


def test_block_six_two_two():
    m = block_construction(6, 2, 2)
    kp, km = pm_blocks(2)
    grid = [[kp, km, km], [km, kp, km], [kp, km, km]]
    expected = []
    for brow in grid:
        for sub in range(2):
            expected.append(tuple(e for blk in brow for e in blk.rows[sub]))
    assert m.rows == tuple(expected)
    assert is_flat_idempotent(m, 2)
    assert exact_rank(m) == 2 == fraction_rank(m.rows)


def test_block_rejects_bad_input():
    with pytest.raises(InfeasibleTripleError):
        block_construction(7, 2, 2)
    with pytest.raises(InfeasibleTripleError):
        block_construction(8, 3, 2)
    with pytest.raises(InfeasibleTripleError):
        block_construction(8, 2, 5)


def test_block_row_type_count_equals_rank():
    for n, k, r in [(8, 2, 3), (6, 2, 2), (12, 2, 4), (12, 4, 2), (8, 2, 2)]:
        m = block_construction(n, k, r)
        assert row_types(m).count == r


def test_rank2_standard_m_zero_unique():
    params, mat = rank2_standard(4, 2, 0, 0, 0)
    assert enumerate_rank2_params(4, 2) == [(0, 0, 0)]
    assert is_flat_idempotent(mat, 2)
    assert params.b == 0 and params.a == 2 and params.c == 1


def test_rank2_standard_sweep_eight_two():
    for t, q, l in enumerate_rank2_params(8, 2):
        params, mat = rank2_standard(8, 2, t, q, l)
        assert is_flat_idempotent(mat, 2), (t, q, l)
        assert exact_rank(mat) == 2
        assert row_types(mat).count == 2
        rm = row_types(mat).multiplicity
        assert set(rm) <= {params.x, 8 - params.x}


def test_rank2_standard_rejects_out_of_range():
    with pytest.raises(ValueError):
        rank2_standard(8, 2, 0, 0, 2)  # l > ceil(m/2)
    with pytest.raises(ValueError):
        rank2_standard(8, 2, 3, 0, 1)  # q+t-floor(m/2) > l
    with pytest.raises(InfeasibleTripleError):
        rank2_standard(7, 2, 0, 0, 0)


def test_enumerate_params_count_structure():
    # For each (i, j) with i >= j in 0..floor(m/2), there are j+1 parameter
    # triples realizing row anchor k+2i and column anchor k+2j.
    n, k = 8, 2
    m = (n - 2 * k) // 2
    fm, cm = m // 2, (m + 1) // 2
    counts = {}
    for t, q, l in enumerate_rank2_params(n, k):
        i = t + q
        j = cm + t - l
        counts[(i, j)] = counts.get((i, j), 0) + 1
    for i in range(fm + 1):
        for j in range(i + 1):
            assert counts[(i, j)] == j + 1, (i, j)


def test_enumerate_params_round_trip():
    for n, k in [(4, 2), (6, 2), (8, 2), (8, 4), (10, 2)]:
        triples = enumerate_rank2_params(n, k)
        assert triples == sorted(triples)
        for t, q, l in triples:
            params, mat = rank2_standard(n, k, t, q, l)
            params.validate()
            assert mat.n == n


def test_params_invariants():
    params, _ = rank2_standard(10, 2, 1, 0, 1)
    assert params.x == 2 * params.t + 2 * params.q + params.k
    m = params.m
    assert params.y == params.k + 2 * ((m + 1) // 2) + 2 * params.t - 2 * params.l
    assert params.a_p == params.b_p + params.k // 2
    assert params.c1p == params.c2p + params.k // 2


def test_params_validate_rejects_inconsistent():
    params, _ = rank2_standard(8, 2, 0, 0, 0)
    bad = Rank2Params(
        n=params.n, k=params.k, m=params.m,
        a=params.a, b=params.b, c=params.c,
        a_p=params.a_p + 1, a_m=params.a_m - 1,
        b_p=params.b_p, b_m=params.b_m,
        c1p=params.c1p, c1m=params.c1m, c2p=params.c2p, c2m=params.c2m,
        t=params.t, q=params.q, l=params.l,
    )
    with pytest.raises(ValueError):
        bad.validate()


def test_trace_equals_k_times_rank():
    for t in feasible_triples(16):
        mat = construct_for_triple(t.n, t.k, t.r)
        assert mat.trace() == t.k * t.r


def test_constructor_row_type_counts():
    assert row_types(rank1_canonical(9, 3)).count == 1
    _, mat = rank2_standard(12, 2, 1, 1, 1)
    assert row_types(mat).count == 2
