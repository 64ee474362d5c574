import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermcodes.funcspace import (
    full_degree_basis,
    genus,
    includes_full_degree,
    is_corner_space,
    lg_basis,
    lg_dimension,
    max_included_degree,
)


def exps(basis):
    return [m.exponents for m in basis]


def test_lg_examples():
    assert exps(lg_basis(2, 0)) == [(0, 0)]
    assert set(exps(lg_basis(2, 3))) == {(0, 0), (1, 0), (0, 1)}
    b = lg_basis(3, 8)
    assert set(exps(b)) == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    assert [m.pole_order(3) for m in b] == [0, 3, 4, 6, 7, 8]


def test_lg_json():
    assert lg_basis(2, 3).to_json() == [
        {"i": 0, "j": 0, "pole": 0}, {"i": 1, "j": 0, "pole": 2}, {"i": 0, "j": 1, "pole": 3},
    ]


def test_full_degree_sizes():
    assert set(exps(full_degree_basis(2, 1))) == {(0, 0), (1, 0), (0, 1)}
    assert len(full_degree_basis(2, 2)) == 6
    assert len(full_degree_basis(3, 2)) == 10


def test_inclusion_examples():
    assert includes_full_degree(3, 8, 2)
    assert not includes_full_degree(3, 7, 2)
    assert all(includes_full_degree(q, 0, 0) for q in (2, 3, 4, 5))


def test_max_included_degree_examples():
    assert max_included_degree(3, 8) == 2
    assert max_included_degree(4, 9) == 1
    assert max_included_degree(2, 0) == 0


def test_dimension_examples():
    assert lg_dimension(2, 3) == 3
    assert lg_dimension(3, 8) == 6
    assert lg_dimension(2, 1) == 1


def test_corner_examples():
    assert is_corner_space(3, 8) == (True, 2)
    assert is_corner_space(3, 9) == (False, None)
    assert is_corner_space(2, 0) == (True, 0)
    assert [r for r in range(19) if is_corner_space(3, r)[0]] == [0, 1, 2, 4, 5, 8]
    assert [r for r in range(9) if is_corner_space(2, r)[0]] == [0, 1, 3]


def test_negative_rho_rejected():
    with pytest.raises(ValueError):
        lg_basis(2, -1)


@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 80))
def test_pole_orders_distinct_and_bounded(q, rho):
    poles = [m.pole_order(q) for m in lg_basis(q, rho)]
    assert poles == sorted(poles)
    assert len(set(poles)) == len(poles)
    assert all(p <= rho for p in poles)
    assert all(m.exponents[1] < q for m in lg_basis(q, rho))


@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 60))
def test_dimension_is_monotone_and_counts_nongaps(q, rho):
    # nongaps of the semigroup <q, q+1> up to rho
    nongaps = {a * q + b * (q + 1) for a in range(rho + 1) for b in range(q)}
    assert lg_dimension(q, rho) == len([v for v in nongaps if v <= rho])
    assert lg_dimension(q, rho + 1) - lg_dimension(q, rho) in (0, 1)


@given(st.sampled_from([2, 3, 4, 5]), st.integers(0, 60))
def test_max_included_degree_is_largest(q, rho):
    m = max_included_degree(q, rho)
    assert includes_full_degree(q, rho, m)
    assert not includes_full_degree(q, rho, m + 1)


def test_riemann_roch_above_2g_minus_1():
    for q in (2, 3, 4, 5):
        g = genus(q)
        for rho in range(2 * g - 1, 3 * q * q + 1):
            assert lg_dimension(q, rho) == rho - g + 1
