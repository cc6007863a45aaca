import random
from itertools import product

import pytest
from conftest import bundled

import oracles as O
from gvcat.braided import (
    TwistData, canonical_double_twist, canonical_gamma, compute_vartheta, enumerate_double_twists,
    enumerate_twists,
)
from gvcat.builders import build_graded_lines, build_three_object_gv, build_trivial_braided
from gvcat.core import StructureError, enumerate_nat_isos, identity_functor
from gvcat.duality import dualizing_from_K, find_dualizing, quasi_inverse
from gvcat.pivotal import (
    enumerate_pivotal, enumerate_ribbon, f_to_psi, pivotal_to_twist, pivotal_twist_report,
    psi_from_twist, psi_is_functorial, psi_to_f, ribbon_check, twist_involution, twist_to_pivotal,
    validate_pivotal_psi,
)
from gvcat.pivotal import _psi_trivial_on_unit, _rotation_split


def e1_gv():
    m = build_three_object_gv(5)
    return dualizing_from_K(m, m.cat.obj("K"))


def e2(sign=-1, K=0):
    b = build_graded_lines(sign=sign)
    gv = dualizing_from_K(b.base, K)
    return gv, quasi_inverse(gv), b


def test_e1_counts_match_the_remark():
    # four monoidal isomorphisms Id ≅ D², one of them pivotal
    census = enumerate_pivotal(e1_gv())
    assert census.counts() == {"natural_isos": 16, "monoidal_isos": 4, "pivotal": 1}


def test_natural_iso_count_matches_brute_force(corpus_file):
    _, cf = corpus_file
    gv = cf.gv()
    cat, D2 = gv.cat, gv.D2()
    brute = 0
    for comps in product(*[O.isos(cat, x, D2(x)) for x in range(cat.n)]):
        if all(O.c(cat, comps[f.dst], f) == O.c(cat, D2(f), comps[f.src]) for f in O.mors(cat)):
            brute += 1
    assert enumerate_pivotal(gv).natural_isos == brute


def test_terminal_identity_psi_is_pivotal():
    b = build_trivial_braided()
    gv = dualizing_from_K(b.base, 0)
    census = enumerate_pivotal(gv)
    assert census.counts() == {"natural_isos": 1, "monoidal_isos": 1, "pivotal": 1}
    psi = f_to_psi(gv, census.pivotal[0])
    assert all(v == k for tab in psi.table.values() for k, v in tab.items())
    assert validate_pivotal_psi(gv, psi).ok


def test_e1_unique_pivotal_passes_and_others_fail_at_unit_slot():
    gv = e1_gv()
    census = enumerate_pivotal(gv)
    (piv,) = census.pivotal
    assert validate_pivotal_psi(gv, f_to_psi(gv, piv)).ok
    for f in census.monoidal:
        if f.components == piv.components:
            continue
        psi = f_to_psi(gv, f)
        rep = validate_pivotal_psi(gv, psi)
        assert not rep.ok
        # monoidality survives as the split rotation; only the unit slot at K breaks
        assert _rotation_split(gv, psi)
        assert not _psi_trivial_on_unit(gv, psi, gv.K, unit_first=True)
        assert _psi_trivial_on_unit(gv, psi, gv.K, unit_first=False)


def test_f_psi_roundtrip_on_random_natural_isos():
    gv, _, _ = e2()
    rng = random.Random(7)
    isos = enumerate_nat_isos(identity_functor(gv.cat), gv.D2(), gv.cat)
    for _ in range(10):
        f = rng.choice(isos)
        psi = f_to_psi(gv, f)
        assert psi_is_functorial(gv, psi)
        assert psi_to_f(gv, psi).components == f.components


def test_non_functorial_psi_is_malformed():
    gv = e1_gv()
    (piv,) = enumerate_pivotal(gv).pivotal
    psi = f_to_psi(gv, piv)
    table = {k: dict(v) for k, v in psi.table.items()}
    key = next(k for k, v in table.items() if len(v) > 1)
    a, b = list(table[key])[:2]
    table[key][a] = table[key][b]
    bad = type(psi)(table)
    assert not psi_is_functorial(gv, bad)
    assert validate_pivotal_psi(gv, bad).structural


def test_survivors_satisfy_duality_compatibility(corpus_file):
    _, cf = corpus_file
    gv = cf.gv()
    cat, D = gv.cat, gv.D
    for f in enumerate_pivotal(gv).pivotal:
        assert all(f[D(x)] == cat.inv(D(f[x])) for x in range(cat.n))


def test_pivotal_count_equals_twists_trivial_on_k(braided_file):
    _, cf = braided_file
    b = cf.braiding
    for gv in find_dualizing(b.base):
        census = enumerate_pivotal(gv)
        twists = [t for t in enumerate_twists(b) if gv.cat.is_identity(t[gv.K])]
        assert len(census.pivotal) == len(twists)
        assert pivotal_twist_report(gv, b, census).ok


def test_pivotal_twist_roundtrip_e2():
    gv, qi, b = e2()
    for f in enumerate_pivotal(gv, qi).pivotal:
        th = pivotal_to_twist(gv, qi, b, f)
        assert twist_to_pivotal(gv, qi, b, th).components == f.components


def test_symmetric_vartheta_gives_identity_twist():
    gv, qi, b = e2()
    tp = compute_vartheta(gv, qi, b, 1)
    th = pivotal_to_twist(gv, qi, b, tp)
    assert all(gv.cat.is_identity(c) for c in th.components)


def test_psi_from_twist_matches_f_to_psi(braided_file):
    _, cf = braided_file
    gv, b = cf.gv(), cf.braiding
    qi = quasi_inverse(gv)
    for th in enumerate_twists(b):
        assert psi_from_twist(gv, b, th) == f_to_psi(gv, twist_to_pivotal(gv, qi, b, th))


def test_involution_properties(braided_file):
    _, cf = braided_file
    gv, b = cf.gv(), cf.braiding
    qi = quasi_inverse(gv)
    cat = gv.cat
    C, _ = canonical_double_twist(gv, qi, b)
    gamma, _ = canonical_gamma(gv, qi, b)
    D2 = gv.D2()
    for th in enumerate_twists(b):
        prime = twist_involution(gv, qi, b, th)
        assert all(cat.compose(th[x], prime[x]) == C[x] for x in range(cat.n))
        if cat.is_identity(th[gv.K]):
            f, f2 = twist_to_pivotal(gv, qi, b, th), twist_to_pivotal(gv, qi, b, prime)
            assert all(cat.compose(f[D2(x)], f2[x]) == gamma[x] for x in range(cat.n))


def test_symmetric_involution_trivial():
    b = build_trivial_braided()
    gv = dualizing_from_K(b.base, 0)
    qi = quasi_inverse(gv)
    (th,) = enumerate_twists(b)
    assert twist_involution(gv, qi, b, th).components == th.components


def test_e2_ribbon_count_and_verdicts():
    gv, qi, b = e2()
    twists = enumerate_twists(b)
    assert len(twists) == 2
    assert all(ribbon_check(gv, qi, b, t) for t in twists)
    assert len(enumerate_ribbon(gv, b)) == 2


def test_ribbon_by_transport_matches_brute(braided_file):
    # oracle: θ is ribbon iff θ_X = ε⁻¹ D⁻¹(θ_DX) ε, recomputed from raw tables
    _, cf = braided_file
    gv, b = cf.gv(), cf.braiding
    qi = quasi_inverse(gv)
    cat, D = gv.cat, gv.D
    for th in enumerate_twists(b):
        direct = all(
            O.chain(cat, qi.counit[x], qi.Dinv(th[D(x)]), O.inverse(cat, qi.counit[x])) == th[x]
            for x in range(cat.n))
        assert ribbon_check(gv, qi, b, th) == direct


def test_double_twist_rejected_by_ribbon_check():
    gv, qi, b = e2()
    dt = enumerate_double_twists(b)[0]
    with pytest.raises(StructureError):
        ribbon_check(gv, qi, b, dt)
    # same components relabelled as a twist are not a twist unless C-compatible
    if dt.components not in {t.components for t in enumerate_twists(b)}:
        with pytest.raises(StructureError):
            ribbon_check(gv, qi, b, TwistData(dt.components, 1))


def test_lines_z4_has_fewer_ribbons_than_twists():
    cf = bundled("lines_z4")
    gv, b = cf.gv(), cf.braiding
    assert len(enumerate_twists(b)) == 4
    assert len(enumerate_ribbon(gv, b)) == 2


def test_semion_k1_has_no_pivotal_structure():
    cf = bundled("semion_z5")
    gv = dualizing_from_K(cf.monoidal, 1)
    census = enumerate_pivotal(gv)
    assert census.counts()["pivotal"] == 0
    assert census.counts()["monoidal_isos"] > 0

