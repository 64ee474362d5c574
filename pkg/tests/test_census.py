import itertools

import numpy as np
import pytest

from hermcodes.census import (
    conic_search,
    exhaustive_census,
    full_support_classes,
    line_search,
)
from hermcodes.code import hermitian_code, is_codeword, parity_check_matrix
from hermcodes.field import field_tables
from hermcodes.gflinalg import BudgetExceeded, normalize_first_nonzero, nullspace


def codewords_by_enumeration(spec, w_max):
    """Every nonzero codeword of weight <= w_max, one per projective class."""
    H = parity_check_matrix(spec)
    T = field_tables(spec.field)
    basis = np.array(nullspace(H), dtype=np.int64)
    found = set()
    for coeffs in itertools.product(range(spec.field.order), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = np.zeros(H.cols, dtype=np.int64)
        for c, b in zip(coeffs, basis):
            if c:
                v = T.add[v, T.mul[c, b]]
        if np.count_nonzero(v) <= w_max:
            found.add(tuple(int(x) for x in normalize_first_nonzero(spec.field, v)))
    return found


@pytest.mark.parametrize("rho,w_max", [(0, 4), (1, 4), (3, 6), (4, 6), (5, 6), (6, 6)])
def test_q2_census_is_complete(rho, w_max):
    spec = hermitian_code(2, rho)
    rep = exhaustive_census(spec, w_max, report=False)
    got = {tuple(e.representative) for e in rep.entries}
    assert got == codewords_by_enumeration(spec, w_max)


@pytest.mark.parametrize("q,rho,w", [(2, 3, 4), (3, 4, 3), (3, 8, 4)])
def test_entries_are_sound(q, rho, w):
    spec = hermitian_code(q, rho)
    H = parity_check_matrix(spec)
    rep = exhaustive_census(spec, w)
    assert rep.entries
    for e in rep.entries:
        c = np.array(e.representative)
        assert is_codeword(H, c)
        assert list(np.flatnonzero(c)) == e.support and len(e.support) == e.weight
        assert c[e.support[0]] == 1
    keys = [e.key() for e in rep.entries]
    assert keys == sorted(keys) and len(set(map(str, keys))) == len(keys)


def test_q2_rho3_weight3_supports_are_collinear():
    rep = exhaustive_census(hermitian_code(2, 3), 3)
    assert rep.counts == {3: {"classes": len(rep.entries), "vectors": 3 * len(rep.entries)}}
    assert all(e.support_report.collinear for e in rep.entries)


def test_below_distance_is_empty():
    assert exhaustive_census(hermitian_code(3, 8), 3).entries == []
    assert exhaustive_census(hermitian_code(3, 8), 5, w_min=5).entries == []


@pytest.mark.parametrize("q,rho", [(2, 3), (3, 4), (3, 5), (3, 8)])
def test_line_search_matches_exhaustive(q, rho):
    spec = hermitian_code(q, rho)
    ex = exhaustive_census(spec, _distance(q, rho), report=False)
    m = ex.m
    ln = line_search(spec, m, report=False)
    w = m + 2
    assert ln.supports(w) == ex.supports(w)
    assert ln.stats["lines_enumerated"] == ln.stats["expected_lines"]


def _distance(q, rho):
    return {(2, 3): 3, (3, 4): 3, (3, 5): 3, (3, 8): 4}[(q, rho)]


def test_conic_search_matches_exhaustive():
    spec = hermitian_code(3, 9)
    ex = exhaustive_census(spec, 6, w_min=6, m=2, report=False)
    co = conic_search(spec, 2, report=False)
    assert co.supports(6) == ex.supports(6)
    assert len(ex.entries) == 1692


def test_conic_search_refuses_full_mode_for_large_q():
    with pytest.raises(BudgetExceeded):
        conic_search(hermitian_code(4, 5), 1, restricted=False)


def test_budget_refusal():
    with pytest.raises(BudgetExceeded) as info:
        exhaustive_census(hermitian_code(3, 8), 6, budget=10**4)
    assert info.value.estimate > 10**4


def test_full_support_classes_line(gf9):
    H = parity_check_matrix(hermitian_code(3, 0))
    (v,) = full_support_classes(H, [0, 1])
    assert list(v) == [1, int(field_tables(gf9).neg[1])]


def test_csv_and_json():
    rep = exhaustive_census(hermitian_code(2, 3), 3)
    rows = rep.to_csv_rows()
    assert rows[0] == ["support", "weight", "collinear", "on_conic"]
    assert len(rows) == len(rep.entries) + 1
    js = rep.to_json()
    assert list(js) == sorted(js) and js["counts"]["3"]["classes"] == len(rep.entries)


def test_parallel_census_is_identical():
    spec = hermitian_code(3, 8)
    a = exhaustive_census(spec, 4, jobs=1).to_json()
    b = exhaustive_census(spec, 4, jobs=4).to_json()
    assert a == b


@pytest.mark.slow
def test_q4_line_search_matches_exhaustive():
    spec = hermitian_code(4, 5)
    ex = exhaustive_census(spec, 3, w_min=3, report=False, jobs=4)
    assert line_search(spec, 1, report=False).supports(3) == ex.supports(3)
