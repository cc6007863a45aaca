import pytest
from conftest import bundled

import oracles as O
from gvcat.builders import build_extension_specimen, build_three_object_gv, build_trivial
from gvcat.core import Functor, MorId, StructureError, compose_functors, identity_functor
from gvcat.duality import dualizing_from_K, find_dualizing
from gvcat.extension import (
    abstract_extension, extended_duality, extension_diagram_commutes, monoidal_extension,
    permute_monoidal, roundtrip_check, universal_extension_functor, universal_functor,
    verify_r_extension,
)
from gvcat.monoidal import MonoidalFunctorData, validate_monoidal
from gvcat.rigidity import rigidity_report


def e1_gv():
    m = build_three_object_gv(5)
    return dualizing_from_K(m, m.cat.obj("K"))


def all_triples():
    """(name, gv, f) for every dualizing K and every f: K → 𝟙 in the corpus."""
    out = []
    for name in ["trivial", "e1_z5", "e2_minus", "e2_plus", "semion_z5", "lines_z4"]:
        m = bundled(name).monoidal
        for gv in find_dualizing(m):
            for f in m.cat.hom(gv.K, m.unit):
                out.append((f"{name}:{m.cat.objects[gv.K]}:{m.cat.label(f)}", gv, f))
    return out


TRIPLES = all_triples()


@pytest.fixture(params=TRIPLES, ids=[t[0] for t in TRIPLES])
def triple(request):
    return request.param[1:]


def test_specimen_shape():
    ex = build_extension_specimen()
    cat = ex.M.cat
    assert cat.n == 4
    assert cat.objects[-1] == "I" and ex.one == 3 and ex.M.unit == 3
    assert cat.hom_size(ex.one, ex.one) == 2


def test_specimen_is_not_rigid():
    ex = build_extension_specimen()
    gv, report = verify_r_extension(ex)
    assert report.ok
    rr = rigidity_report(gv)
    assert not rr.info["rigid"]
    assert not rr.info["all_comparisons_iso"] and not rr.info["dual_comparisons_iso"]


def test_terminal_extension():
    m = build_trivial()
    gv = dualizing_from_K(m, m.unit)
    ex = monoidal_extension(gv, m.cat.id(m.unit))
    assert ex.M.cat.n == 2
    assert ex.M.cat.hom_size(ex.one, ex.one) == 2
    _, report = verify_r_extension(ex)
    assert report.ok


def test_hom_sets_of_the_extension(triple):
    gv, f = triple
    ext = abstract_extension(gv.cat, gv.K, gv.m.unit, f)
    assert ext.report.ok
    base, cat, one = gv.cat, ext.cat, ext.one
    for x in range(base.n):
        assert cat.hom_size(one, x) == base.hom_size(gv.m.unit, x)
        assert cat.hom_size(x, one) == base.hom_size(x, gv.K)
        for y in range(base.n):
            assert cat.hom_size(x, y) == base.hom_size(x, y)
    assert cat.hom_size(one, one) == base.hom_size(gv.m.unit, gv.K) + 1


def test_pi_after_delta_is_f(triple):
    gv, f = triple
    ext = abstract_extension(gv.cat, gv.K, gv.m.unit, f)
    assert ext.cat.compose(ext.pi, ext.delta) == f


def test_extension_category_passes_oracle(triple):
    gv, f = triple
    ext = abstract_extension(gv.cat, gv.K, gv.m.unit, f)
    assert O.category_ok(ext.cat)


def test_unit_square_commutes(triple):
    gv, f = triple
    assert extension_diagram_commutes(gv.m, gv.K, f)


@pytest.mark.parametrize("name", ["trivial", "e1_z5", "e2_minus"])
def test_monoidal_extension_passes_oracle(name):
    m = bundled(name).monoidal
    for gv in find_dualizing(m):
        for f in m.cat.hom(gv.K, m.unit):
            ex = monoidal_extension(gv, f)
            assert validate_monoidal(ex.M).ok
            assert O.monoidal_ok(ex.M)
            assert ex.one in O.dualizing_objects(ex.M)


def test_new_unit_is_strict(triple):
    gv, f = triple
    M = monoidal_extension(gv, f).M
    for x in range(M.cat.n):
        assert M.t(M.unit, x) == x and M.t(x, M.unit) == x
        assert M.l(x) == M.cat.id(x) and M.r(x) == M.cat.id(x)


def test_verify_r_extension(triple):
    gv, f = triple
    _, report = verify_r_extension(monoidal_extension(gv, f))
    assert report.ok, report.failures


def test_extended_duality_fixes_new_unit(triple):
    gv, f = triple
    ex = monoidal_extension(gv, f)
    D = extended_duality(ex)
    assert D.obj_map[ex.one] == ex.one
    assert D(ex.M.cat.id(ex.one)) == ex.M.cat.id(ex.one)


def test_roundtrip(triple):
    gv, f = triple
    report = roundtrip_check(gv, f)
    assert report.ok, report.failures


def test_roundtrip_e1_zero():
    gv = e1_gv()
    report = roundtrip_check(gv, MorId(gv.K, gv.m.unit, 0))
    assert report.ok
    assert report.info["hom_one_one"] == 2
    assert report.info["objects"] == 4


def test_refuses_when_df_differs():
    gv = e1_gv()
    f = MorId(gv.K, gv.m.unit, 0)
    other = MorId(gv.K, gv.m.unit, 1)
    with pytest.raises(StructureError, match="Df"):
        monoidal_extension(gv, f, dual_check=lambda gv, f: other)


def test_abstract_extension_rejects_mistyped_f():
    gv = e1_gv()
    with pytest.raises(StructureError):
        abstract_extension(gv.cat, gv.K, gv.m.unit, gv.cat.id(gv.K))


def _datum(ex, N, P):
    base = ex.ext.base
    F = compose_functors(P, ex.iota)
    mu = {(x, y): N.cat.id(F(ex.gv.m.t(x, y))) for x in range(base.n) for y in range(base.n)}
    return MonoidalFunctorData(F, mu, N.cat.id(F(ex.ext.unit))), P(ex.pi), P(ex.delta)


def test_universal_functor_identity():
    ex = build_extension_specimen()
    F, varpi, xi = _datum(ex, ex.M, identity_functor(ex.M.cat))
    G = universal_extension_functor(ex, ex.M, varpi, F, xi)
    assert all(G.F(u) == u for u in ex.M.cat.morphisms)


def test_universal_functor_permuted():
    ex = build_extension_specimen()
    N, P = permute_monoidal(ex.M, [2, 0, 3, 1])
    assert validate_monoidal(N).ok
    F, varpi, xi = _datum(ex, N, P)
    G = universal_extension_functor(ex, N, varpi, F, xi)
    assert G.F.obj_map == P.obj_map
    assert all(G.F(u) == P(u) for u in ex.M.cat.morphisms)


def test_universal_functor_rejects_non_commuting_triangle():
    # along the zero map every triangle commutes, so extend along an iso
    m = bundled("e2_minus").monoidal
    gv = dualizing_from_K(m, m.unit)
    ex = monoidal_extension(gv, MorId(m.unit, m.unit, 1))
    F, varpi, xi = _datum(ex, ex.M, identity_functor(ex.M.cat))
    cat = ex.M.cat
    bad = [g for g in cat.hom(xi.src, xi.dst) if g != xi
           and cat.compose(ex.pi, g) != ex.ext.f]
    assert bad
    with pytest.raises(StructureError, match="triangle"):
        universal_extension_functor(ex, ex.M, varpi, F, bad[0])


def test_plain_universal_functor_is_unique():
    ex = build_extension_specimen()
    ext, cat = ex.ext, ex.M.cat
    G = universal_functor(ext, cat, ext.iota, ext.one, ext.delta, ext.pi)
    assert all(G(u) == u for u in cat.morphisms)


def test_plain_universal_functor_rejects_triangle():
    ex = build_extension_specimen()
    ext, cat = ex.ext, ex.M.cat
    with pytest.raises(StructureError):
        universal_functor(ext, cat, ext.iota, ext.one, ext.delta, cat.id(ext.one))
