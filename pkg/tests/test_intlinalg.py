from math import gcd

import pytest
from hypothesis import given, strategies as st

from bingfpp.intlinalg import (
    IntMatrix,
    cokernel_structure,
    determinant,
    invariant_factors,
    kernel_basis,
    smith_normal_form,
    solve,
    submodule_has_primitive,
)
from oracles import brute_has_primitive, det_fraction, minor_gcd_invariant_factors, rational_rank

entries = st.integers(-10, 10)


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))


def test_snf_examples():
    assert smith_normal_form([[4, 0], [0, 6]]).diagonal == (2, 12)
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == (2, 4)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == (0, 0)
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([[5]]).diagonal == (5,)


def test_invariant_factor_split():
    inv = invariant_factors([[1, 0, 0], [0, 2, 0], [0, 0, 0]])
    assert inv.nontrivial == (2,) and inv.unit_count == 1 and inv.zero_count == 1
    assert inv.rank == 2


@given(matrices())
def test_snf_decomposition_is_exact(rows):
    dec = smith_normal_form(rows)
    m = IntMatrix.from_rows(rows)
    assert dec.U @ m @ dec.V == dec.D
    assert abs(determinant(dec.U)) == 1 and abs(determinant(dec.V)) == 1
    assert dec.check()


@given(matrices())
def test_snf_matches_minor_oracle(rows):
    dec = smith_normal_form(rows)
    expected = minor_gcd_invariant_factors(rows)
    assert list(dec.diagonal[:dec.rank]) == expected
    assert all(d == 0 for d in dec.diagonal[dec.rank:])


@given(matrices())
def test_snf_is_deterministic(rows):
    assert smith_normal_form(rows) == smith_normal_form(rows)


@given(matrices())
def test_rank_matches_rational_rank(rows):
    assert smith_normal_form(rows).rank == rational_rank(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_fraction_elimination(rows):
    assert determinant(IntMatrix.from_rows(rows)) == det_fraction(rows)


@given(matrices())
def test_kernel_basis(rows):
    m = IntMatrix.from_rows(rows)
    k = kernel_basis(m)
    assert k.rows == m.cols
    assert k.cols == m.cols - rational_rank(rows)
    if k.cols:
        assert (m @ k).is_zero()
        # a lattice basis of the kernel is saturated: its maximal minors are coprime
        assert minor_gcd_invariant_factors(k.tolist()) == [1] * k.cols


def test_kernel_sign_convention():
    assert kernel_basis([[1, 1]]).tolist() == [[1], [-1]]


@given(matrices())
def test_cokernel_counts(rows):
    cs = cokernel_structure(rows)
    diag = minor_gcd_invariant_factors(rows)
    assert cs.free_rank == len(rows) - len(diag)
    assert list(cs.torsion) == [d for d in diag if d > 1]


def test_primitive_examples():
    assert not submodule_has_primitive([[2, 0], [0, 2]], 2)
    assert submodule_has_primitive([[2], [3]], 2)
    assert not submodule_has_primitive(IntMatrix.zeros(3, 1), 3)
    with pytest.raises(ValueError):
        submodule_has_primitive([[1, 2]], 3)


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.lists(st.integers(-4, 4), min_size=k, max_size=k), min_size=1, max_size=3))))
def test_primitive_matches_brute_force(case):
    k, gens = case
    cols = IntMatrix.from_columns(gens, k)
    assert submodule_has_primitive(cols, k) == brute_has_primitive(gens)


@given(matrices(), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve(rows, x):
    a = IntMatrix.from_rows(rows)
    b = (a @ IntMatrix.from_columns([x[:a.cols]], a.cols)).column(0)
    sol = solve(a, b)
    assert sol is not None
    assert (a @ IntMatrix.from_columns([sol], a.cols)).column(0) == tuple(b)


def test_solve_reports_no_solution():
    assert solve(IntMatrix.from_rows([[2]]), [1]) is None
    assert solve(IntMatrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    assert IntMatrix.identity(3).trace() == 3
    assert IntMatrix.from_rows([[1, 2], [3, 4]]).T.tolist() == [[1, 3], [2, 4]]
    assert gcd(*smith_normal_form([[6, 10, 15]]).diagonal) == 1
