import pytest
from hypothesis import given, strategies as st

from bingfpp.groups import (
    Abelian,
    Catalog,
    FiniteAbelianGroup,
    Unknown,
    browning_count,
    browning_representatives,
    canonicalize_abelian,
    catalog_lookup,
    catalog_table,
    deficiency_lower_bound,
    multiplier_invariant_factor_count,
    parse_group_spec,
    schur_multiplier_abelian,
)
from oracles import browning_by_closure, exterior_square_orders


def test_canonical_form():
    assert canonicalize_abelian([2, 3]).invariant_factors == (6,)
    assert canonicalize_abelian([4, 2, 1, 4]).invariant_factors == (2, 4, 4)
    assert canonicalize_abelian([]).order == 1
    with pytest.raises(ValueError):
        FiniteAbelianGroup((4, 2))


def test_multiplier_examples():
    assert schur_multiplier_abelian(FiniteAbelianGroup((2, 2))).invariant_factors == (2,)
    assert schur_multiplier_abelian(FiniteAbelianGroup((2, 4, 4))).invariant_factors == (2, 2, 4)
    assert schur_multiplier_abelian(FiniteAbelianGroup((6,))).invariant_factors == ()


@given(st.lists(st.sampled_from([2, 3, 4, 6]), min_size=1, max_size=3))
def test_multiplier_matches_exterior_square(orders):
    g = canonicalize_abelian(orders)
    assert list(schur_multiplier_abelian(g).invariant_factors) == exterior_square_orders(list(g.invariant_factors))


@given(st.lists(st.integers(1, 30), max_size=4))
def test_canonicalize_preserves_order_and_chain(orders):
    g = canonicalize_abelian(orders)
    prod = 1
    for k in orders:
        prod *= k
    assert g.order == prod
    m = g.invariant_factors
    assert all(b % a == 0 for a, b in zip(m, m[1:])) and all(k > 1 for k in m)


def test_browning_examples():
    assert browning_count(FiniteAbelianGroup((5, 5))) == 1
    assert browning_count(FiniteAbelianGroup((3, 3))) == 1
    assert browning_count(FiniteAbelianGroup((8, 8, 8))) == 2
    assert browning_representatives(FiniteAbelianGroup((8, 8, 8))) == [1, 3]
    with pytest.raises(ValueError):
        browning_count(FiniteAbelianGroup((5,)))


def _chain(m1, ks):
    out = [m1]
    for k in ks:
        out.append(out[-1] * k)
    return out


chains = st.builds(_chain, st.integers(2, 40), st.lists(st.sampled_from([1, 2, 3]), min_size=1, max_size=4))


@given(chains)
def test_browning_matches_closure_oracle(m):
    g = FiniteAbelianGroup(tuple(m))
    assert browning_count(g) == browning_by_closure(m)
    reps = browning_representatives(g)
    assert len(reps) == browning_count(g) and reps[0] == 1


def test_group_spec_parsing():
    assert parse_group_spec("abelian:4,2") == Abelian(FiniteAbelianGroup((2, 4)))
    assert parse_group_spec("catalog:a5") == Catalog("A5")
    assert parse_group_spec("catalog:D2n:6").multiplier() == (2,)
    assert parse_group_spec("catalog:D2n:5").multiplier() == ()
    assert parse_group_spec("unknown") == Unknown()
    for bad in ("abelian:x", "nonsense", "catalog:", "unknown:3"):
        with pytest.raises(ValueError):
            parse_group_spec(bad)
    with pytest.raises(KeyError):
        parse_group_spec("catalog:Monster2")


def test_catalog_contents():
    rows = catalog_table()
    sporadic = [r["name"] for r in rows if r["family"] == "sporadic"]
    assert len(sporadic) == 13
    assert all(r["trivial_multiplier"] == (r["multiplier"] == []) for r in rows)
    a5 = catalog_lookup("A5")
    assert a5["triangle"] == [2, 3, 5] and a5["multiplier"] == [2]
    assert Catalog("S4").triangle() == (2, 3, 4)
    assert Catalog("D2n", 7).triangle() == (2, 2, 7)


def test_factor_counts():
    assert multiplier_invariant_factor_count(parse_group_spec("abelian:2,4,4")) == 3
    assert multiplier_invariant_factor_count(parse_group_spec("catalog:M11")) == 0
    assert multiplier_invariant_factor_count(parse_group_spec("catalog:D2n")) is None
    assert multiplier_invariant_factor_count(Unknown()) is None
    assert deficiency_lower_bound(parse_group_spec("abelian:2,2")) == 1
