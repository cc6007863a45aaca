import pytest
from conftest import bundled
from hypothesis import given, settings, strategies as st

import oracles as O
from gvcat.builders import (
    build_graded_lines, build_semion, build_three_object_gv, build_trivial,
)
from gvcat.core import MorId, NatFamily
from gvcat.monoidal import (
    BraidingData, MonoidalData, MonoidalFunctorData, braided_functor_report,
    check_monoidal_transformation, identity_monoidal_functor, invertible_objects,
    opposite_braiding, validate_braiding, validate_monoidal, validate_monoidal_functor,
)
from gvcat.mutation import mutations


def test_bundled_monoidal_structures_pass(corpus_file):
    _, cf = corpus_file
    assert validate_monoidal(cf.monoidal).ok
    assert O.monoidal_ok(cf.monoidal)


def test_bundled_braidings_pass(braided_file):
    _, cf = braided_file
    assert validate_braiding(cf.braiding).ok
    assert O.braiding_ok(cf.braiding, check_base=False)


def test_trivial_structure():
    m = build_trivial()
    assert m.cat.n == 1 and len(m.cat.morphisms) == 1
    assert validate_monoidal(m).ok


@pytest.mark.parametrize("sign", [1, -1])
def test_graded_lines_both_signs(sign):
    b = build_graded_lines(sign=sign)
    rep = validate_braiding(b)
    assert rep.ok
    assert rep.info["symmetric"]
    one = b.base.cat.obj("1")
    assert b.b(one, one).index == sign % 3


def test_semion_is_not_symmetric():
    rep = validate_braiding(build_semion())
    assert rep.ok and not rep.info["symmetric"]


@pytest.mark.parametrize("q,omega", [(1, -1), (2, 1)])
def test_hexagon_failures_detected(q, omega):
    # a braiding that is not compatible with the associator
    b = build_graded_lines(2, 5, q=q, omega=omega)
    assert validate_monoidal(b.base).ok
    assert not validate_braiding(b).ok
    assert not O.braiding_ok(b)


def test_opposite_braiding_is_a_braiding():
    b = build_semion()
    op = opposite_braiding(b)
    assert validate_braiding(op).ok
    assert op.b(1, 1) == b.base.cat.inv(b.b(1, 1))


def test_invertible_objects():
    assert sorted(invertible_objects(build_three_object_gv(5))) == [1]
    assert sorted(invertible_objects(build_graded_lines(4, 5, q=2).base)) == [0, 1, 2, 3]


def test_identity_monoidal_functor_is_valid(corpus_file):
    _, cf = corpus_file
    m = cf.monoidal
    idm = identity_monoidal_functor(m)
    assert validate_monoidal_functor(idm, m, m).ok
    fam = NatFamily(idm.F, idm.F, tuple(m.cat.id(x) for x in range(m.cat.n)))
    assert check_monoidal_transformation(fam, idm, idm, m).ok


def test_identity_is_braided():
    b = build_semion()
    assert braided_functor_report(identity_monoidal_functor(b.base), b, b).ok


def test_bad_monoidal_functor_structure_rejected():
    m = build_three_object_gv(5)
    idm = identity_monoidal_functor(m)
    one = m.unit
    structure = dict(idm.structure)
    structure[(one, one)] = MorId(one, one, 2)
    bad = MonoidalFunctorData(idm.F, structure, idm.unit_iso)
    assert not validate_monoidal_functor(bad, m, m).ok


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), table=st.sampled_from(["comp", "assoc", "braid"]))
def test_validator_agrees_with_oracle_on_mutations(seed, table):
    cf = bundled("semion_z5")
    for mu in mutations(cf, table, 3, seed):
        lib = validate_braiding(mu.cf.braiding).ok
        assert lib == O.braiding_ok(mu.cf.braiding), mu.describe()


def test_non_invertible_braiding_rejected():
    b = build_semion()
    beta = dict(b.beta)
    beta[(1, 1)] = MorId(1, 1, 0)
    bad = BraidingData(b.base, beta)
    assert not validate_braiding(bad).ok


def test_non_invertible_associator_rejected():
    m = build_three_object_gv(5)
    assoc = dict(m.assoc)
    one = m.unit
    assoc[(one, one, one)] = MorId(one, one, 0)
    bad = MonoidalData(m.cat, m.unit, m.tensor_obj, m.tensor_mor, assoc, m.lunit, m.runit)
    rep = validate_monoidal(bad)
    assert not rep.ok
