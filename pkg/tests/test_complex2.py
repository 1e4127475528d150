import pytest
from hypothesis import given, strategies as st

from bingfpp.complex2 import (
    CellularMapData,
    build_Rd,
    build_Td,
    chain_complex,
    euler_characteristic,
    identity_map,
    inclusion_Rd_to_Td,
    is_chain_map,
    retraction_Td_to_Rd,
    standard_complex,
    wedge,
    wedge_map,
)
from bingfpp.intlinalg import IntMatrix
from bingfpp.presentations import deficiency, exponent_sum_matrix, parse_presentation


def K(text):
    return standard_complex(parse_presentation(text))


def test_chain_complex_is_transpose():
    x = K("<a,b | a^2, b^3, [a,b]>")
    cc = chain_complex(x)
    assert cc.d2.tolist() == [[2, 0, 0], [0, 3, 0]]
    assert cc.d1.is_zero() and cc.d1.shape == (1, 2)
    assert cc.d2 == exponent_sum_matrix(x.presentation()).T


@pytest.mark.parametrize("text", ["<a | >", "<a,b | a^2, b^3, [a,b]>", "<a | a, a>", "< | >"])
def test_euler_characteristic_is_deficiency_plus_one(text):
    p = parse_presentation(text)
    assert euler_characteristic(standard_complex(p)) == deficiency(p) + 1


def test_td_shape():
    t = build_Td([2, 4, 4], 1)
    assert t.generator_count == 3 and len(t.relators) == 6
    assert deficiency(t) == 3
    assert t.format() == ("<a1, a2, a3 | a1^2, a2^4, a3^4, a1 a2 a1^-1 a2^-1, a1 a3 a1^-1 a3^-1, "
                          "a2 a3 a2^-1 a3^-1>")
    assert build_Td([8, 8, 8], 3).relators[3].format(("a1", "a2", "a3")) == "a1^3 a2 a1^-3 a2^-1"


@pytest.mark.parametrize("m, d", [([2], 1), ([2, 3], 1), ([1, 2], 1), ([4, 4], 2)])
def test_td_rejects_bad_input(m, d):
    with pytest.raises(ValueError):
        build_Td(m, d)


CHAINS = [([2, 2], 1), ([2, 4, 4], 1), ([3, 3, 9], 1), ([3, 3, 9], 2), ([8, 8, 8], 3), ([5, 5, 5, 5], 2)]


@pytest.mark.parametrize("m, d", CHAINS)
def test_retraction_is_chain_map_and_left_inverse(m, d):
    td, rd = standard_complex(build_Td(m, d)), standard_complex(build_Rd(m[0], m[1], d))
    r, i = retraction_Td_to_Rd(m, d), inclusion_Rd_to_Td(m, d)
    assert is_chain_map(td, rd, r)
    assert is_chain_map(rd, td, i)
    ri = r.compose(i)
    assert ri.f1 == IntMatrix.identity(2) and ri.f2 == IntMatrix.identity(3) and ri.f0 == IntMatrix.identity(1)


def test_non_chain_map_detected():
    x = K("<a | a^2>")
    bad = CellularMapData(IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[2]]))
    assert not is_chain_map(x, x, bad)
    assert is_chain_map(x, x, identity_map(x))


def test_wedge_renames_and_blocks():
    x, y = K("<a | a^2>"), K("<a,b | [a,b]>")
    w = wedge(x, y)
    assert len(w.one_cells) == 3 and len(set(w.one_cells)) == 3
    assert euler_characteristic(w) == euler_characteristic(x) + euler_characteristic(y) - 1
    f = wedge_map(identity_map(x), identity_map(y))
    assert is_chain_map(w, w, f)


@given(st.lists(st.sampled_from([2, 3, 4, 6]), min_size=2, max_size=3))
def test_wedge_euler_characteristic(orders):
    xs = [K(f"<a | a^{k}>") for k in orders]
    w = xs[0]
    for x in xs[1:]:
        w = wedge(w, x)
    assert euler_characteristic(w) == 1


def test_to_dict():
    d = K("<a,b | a^2, b^2, [a,b]>").to_dict()
    assert d == {"vertex_count": 1, "one_cells": ["a", "b"],
                 "two_cells": ["a^2", "b^2", "a b a^-1 b^-1"]}
