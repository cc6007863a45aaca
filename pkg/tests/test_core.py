from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from gvcat.builders import build_three_object_gv, scalar_category
from gvcat.core import (
    FinCategory, Functor, MorId, NatFamily, StructureError, check_naturality, compose_functors,
    enumerate_nat_isos, full_subcategory, identity_functor, opposite, validate_category,
    validate_functor,
)


def one_object(table, n, unit):
    homs = {(0, 0): [f"m{i}" for i in range(n)]}
    return FinCategory.build("mon", ["*"], homs,
                             lambda g, f: MorId(0, 0, table[g.index][f.index]),
                             lambda x: MorId(0, 0, unit))


@st.composite
def tables(draw):
    n = draw(st.integers(1, 4))
    table = [[draw(st.integers(0, n - 1)) for _ in range(n)] for _ in range(n)]
    return table, n, draw(st.integers(0, n - 1))


@settings(max_examples=300, deadline=None)
@given(tables())
def test_validate_category_matches_oracle_on_random_monoids(data):
    table, n, unit = data
    cat = one_object(table, n, unit)
    assert validate_category(cat).ok == O.category_ok(cat)


@pytest.mark.parametrize("n", [2, 3, 5, 6])
def test_cyclic_multiplication_is_a_category(n):
    table = [[(a * b) % n for b in range(n)] for a in range(n)]
    assert validate_category(one_object(table, n, 1)).ok


def test_scalar_category_hom_sizes():
    cat = scalar_category("s", ["a", "b"], [True, False], 4)
    assert cat.hom_size(0, 0) == 4
    assert cat.hom_size(1, 1) == 1
    assert cat.hom_size(0, 1) == 1
    assert cat.label(MorId(0, 0, 3)) == "3@a>a"
    assert cat.id(0) == MorId(0, 0, 1)


def test_identity_not_an_endomorphism_is_rejected():
    cat = scalar_category("s", ["a", "b"], [False, False], 2)
    bad = FinCategory(cat.name, cat.objects, cat.homs, cat.comp, (MorId(0, 1, 0), cat.ids[1]))
    assert not validate_category(bad).ok


def test_inverse_and_isos():
    cat = build_three_object_gv(5).cat
    one = cat.obj("1")
    assert len(cat.isos(one, one)) == 4
    for f in cat.isos(one, one):
        assert cat.compose(cat.inv(f), f) == cat.id(one)
    assert cat.inverse(MorId(one, one, 0)) is None
    assert not cat.isomorphic(cat.obj("0"), one)


def test_seq_is_diagrammatic():
    cat = build_three_object_gv(5).cat
    one = cat.obj("1")
    a, b = MorId(one, one, 2), MorId(one, one, 3)
    assert cat.seq(a, b) == cat.compose(b, a) == MorId(one, one, 1)


def test_opposite_is_involutive_and_valid():
    cat = build_three_object_gv(5).cat
    op = opposite(cat)
    assert validate_category(op).ok
    assert opposite(op).same_tables(cat)


def test_full_subcategory_preserves_indices():
    cat = build_three_object_gv(5).cat
    sub, keep = full_subcategory(cat, [cat.obj("1"), cat.obj("K")])
    assert validate_category(sub).ok
    assert [cat.objects[k] for k in keep] == ["1", "K"]
    assert sub.hom_size(0, 0) == 5


def test_functor_validation_and_composition():
    cat = build_three_object_gv(5).cat
    idf = identity_functor(cat)
    assert validate_functor(idf, cat, cat).ok
    assert compose_functors(idf, idf).same_tables(idf)
    # squaring scalars on End(1) and End(K) is not multiplicative-additive but is a functor
    sq = Functor(cat, cat, (0, 1, 2), {f: MorId(f.src, f.dst, (f.index ** 2) % 5)
                                      if cat.hom_size(f.src, f.dst) > 1 else f for f in cat.morphisms})
    assert validate_functor(sq, cat, cat).ok
    broken = Functor(cat, cat, (0, 1, 2), {f: MorId(f.src, f.dst, 0) for f in cat.morphisms})
    assert not validate_functor(broken, cat, cat).ok


def test_nat_isos_match_brute_force():
    cat = build_three_object_gv(5).cat
    idf = identity_functor(cat)
    found = enumerate_nat_isos(idf, idf, cat)
    brute = [c for c in product(*[O.isos(cat, x, x) for x in range(cat.n)])
             if all(O.c(cat, c[f.dst], f) == O.c(cat, f, c[f.src]) for f in O.mors(cat))]
    assert sorted(f.components for f in found) == sorted(brute)
    assert len(found) == 16
    for fam in found:
        assert check_naturality(fam, cat).ok


def _self_maps_of_two():
    # maps {0,1} → {0,1} as (f(0), f(1)): id, swap, const0, const1
    maps = [(0, 1), (1, 0), (0, 0), (1, 1)]
    table = [[maps.index(tuple(g[f[i]] for i in range(2))) for f in maps] for g in maps]
    return one_object(table, 4, 0)


def test_non_natural_family_detected():
    cat = _self_maps_of_two()
    assert validate_category(cat).ok
    idf = identity_functor(cat)
    assert not check_naturality(NatFamily(idf, idf, (MorId(0, 0, 2),)), cat).ok
    assert check_naturality(NatFamily(idf, idf, (MorId(0, 0, 0),)), cat).ok
    # only the identity is a natural automorphism of Id on this monoid
    assert [f.components for f in enumerate_nat_isos(idf, idf, cat)] == [(MorId(0, 0, 0),)]


def test_missing_hom_entry_is_structural():
    cat = scalar_category("s", ["a"], [True], 3)
    comp = dict(cat.comp)
    comp.pop(next(iter(comp)))
    bad = FinCategory(cat.name, cat.objects, cat.homs, comp, cat.ids)
    rep = validate_category(bad)
    assert not rep.ok and rep.structural


def test_empty_category_is_valid():
    cat = FinCategory.build("empty", [], {}, lambda g, f: None, lambda x: None)
    assert validate_category(cat).ok
    assert cat.n == 0


def test_inv_of_non_iso_raises():
    cat = build_three_object_gv(5).cat
    with pytest.raises(StructureError):
        cat.inv(MorId(1, 1, 0))
