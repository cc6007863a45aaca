import pytest
from conftest import bundled

import oracles as O
from gvcat.builders import build_graded_lines, build_three_object_gv, build_trivial
from gvcat.core import MorId, StructureError
from gvcat.duality import dualizing_from_K, find_dualizing
from gvcat.hecke import (
    IdempotentArrow, dual_of_unit_morphism, extract_triple, find_idempotent_arrows,
    hecke_gv, hecke_subcategory, is_idempotent_arrow,
)
from gvcat.monoidal import validate_monoidal


def ext():
    cf = bundled("e1_extension")
    return cf, cf.gv()


def test_idempotent_arrows_match_oracle(corpus_file):
    _, cf = corpus_file
    found = sorted((a.e, a.pi) for a in find_idempotent_arrows(cf.monoidal))
    assert found == sorted(O.idempotent_arrows(cf.monoidal))


def test_unit_arrow_always_found(corpus_file):
    _, cf = corpus_file
    m = cf.monoidal
    assert IdempotentArrow(m.unit, m.cat.id(m.unit)) in find_idempotent_arrows(m)


def test_e2_only_the_unit_up_to_iso():
    m = build_graded_lines(sign=-1).base
    assert {a.e for a in find_idempotent_arrows(m)} == {m.unit}


def test_extension_has_arrow_to_old_unit():
    cf, gv = ext()
    cat = cf.cat
    old_unit = cat.obj("1")
    arrows = [a for a in find_idempotent_arrows(cf.monoidal) if a.e == old_unit]
    assert arrows
    assert all(a.pi.src == cat.obj("I") for a in arrows)


def test_unit_idempotent_gives_whole_category(corpus_file):
    _, cf = corpus_file
    m = cf.monoidal
    h = hecke_subcategory(m, IdempotentArrow(m.unit, m.cat.id(m.unit)))
    assert h.m.cat.n == m.cat.n
    assert h.m.same_tables(m)


def test_hecke_subcategory_is_monoidal(corpus_file):
    _, cf = corpus_file
    for ia in find_idempotent_arrows(cf.monoidal):
        h = hecke_subcategory(cf.monoidal, ia)
        assert validate_monoidal(h.m).ok
        assert O.monoidal_ok(h.m)


def test_extension_hecke_recovers_e1():
    cf, gv = ext()
    cat = cf.cat
    ia = next(a for a in find_idempotent_arrows(cf.monoidal)
              if a.e == cat.obj("1") and a.pi.index == 1)
    h, sub_gv, rep = hecke_gv(gv, ia)
    assert rep.ok
    assert list(h.m.cat.objects) == ["0", "1", "K"]
    assert h.m.same_tables(build_three_object_gv(5))
    assert h.m.cat.objects[sub_gv.K] == "K"
    assert sub_gv.K in [g.K for g in find_dualizing(h.m)]


def test_extract_triple_from_extension_gives_zero():
    cf, gv = ext()
    cat = cf.cat
    for ia in find_idempotent_arrows(cf.monoidal):
        if ia.e != cat.obj("1"):
            continue
        tri = extract_triple(gv, ia)
        assert tri.report.ok
        assert tri.hecke.m.cat.label(tri.f).startswith("0@")


def test_extract_triple_unit_idempotent_gives_canonical_iso(corpus_file):
    _, cf = corpus_file
    m = cf.monoidal
    gv = dualizing_from_K(m, m.unit)
    if gv is None:
        pytest.skip("unit not dualizing")
    tri = extract_triple(gv, IdempotentArrow(m.unit, m.cat.id(m.unit)))
    assert tri.report.ok
    assert tri.K == tri.hecke.local(gv.D(m.unit))
    assert m.cat.inverse(tri.hecke.lift(tri.f)) is not None


def test_extract_triple_requires_unit_k():
    m = build_three_object_gv(5)
    gv = dualizing_from_K(m, m.cat.obj("K"))
    with pytest.raises(StructureError):
        extract_triple(gv, IdempotentArrow(m.unit, m.cat.id(m.unit)))


def test_not_an_idempotent_arrow():
    m = build_three_object_gv(5)
    zero = MorId(m.unit, m.unit, 0)
    assert not is_idempotent_arrow(m, zero)
    with pytest.raises(StructureError):
        hecke_subcategory(m, IdempotentArrow(m.unit, zero))


def test_dual_of_zero_is_zero_and_squares_to_identity(corpus_file):
    _, cf = corpus_file
    for gv in find_dualizing(cf.monoidal):
        cat = gv.cat
        for f in cat.hom(gv.K, gv.m.unit):
            df = dual_of_unit_morphism(gv, f)
            assert df == f
            assert dual_of_unit_morphism(gv, df) == f


def test_dual_of_unit_morphism_checks_endpoints():
    m = build_trivial()
    gv = dualizing_from_K(m, 0)
    with pytest.raises(StructureError):
        dual_of_unit_morphism(gv, MorId(0, 0, 0)._replace(src=1))


def test_other_arrows_rescale_only_the_unitors():
    cf, gv = ext()
    e1 = build_three_object_gv(5)
    for ia in find_idempotent_arrows(cf.monoidal):
        if ia.e != cf.cat.obj("1"):
            continue
        h = hecke_subcategory(cf.monoidal, ia)
        assert h.m.cat.same_tables(e1.cat)
        assert h.m.assoc == e1.assoc
        assert (h.m.lunit == e1.lunit) == (ia.pi.index == 1)
