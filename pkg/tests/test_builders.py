import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from gvcat.builders import (
    build_graded_lines, build_semion, build_three_object_gv, build_trivial_braided, mor_label,
)
from gvcat.corpus import CORPUS, bundled_path, category_file, corpus_text
from gvcat.core import MorId, StructureError
from gvcat.duality import find_dualizing
from gvcat.fileformat import serialize
from gvcat.monoidal import validate_braiding, validate_monoidal


@pytest.mark.parametrize("name", list(CORPUS))
def test_builders_are_deterministic(name):
    assert corpus_text(name) == corpus_text(name)


@pytest.mark.parametrize("name", list(CORPUS))
def test_bundled_file_matches_builder(name):
    assert bundled_path(name).read_bytes() == corpus_text(name).encode("utf-8")


def test_unknown_corpus_entry():
    with pytest.raises(StructureError, match="nope"):
        category_file("nope")


def test_labels():
    assert mor_label(3, "K", "1") == "3@K>1"
    m = build_three_object_gv(5)
    assert m.cat.label(MorId(2, 2, 3)) == "3@K>K"


@pytest.mark.parametrize("sign", [-1, 1])
def test_e2_braiding_sign(sign):
    b = build_graded_lines(sign=sign)
    cat = b.base.cat
    assert list(cat.objects) == ["0", "1"]
    # 1⊗1 = 0, so β_{1,1} is a scalar on 0
    assert b.beta[(1, 1)] == MorId(0, 0, sign % 3)
    assert b.beta[(0, 1)] == cat.id(1) and b.beta[(1, 0)] == cat.id(1)
    assert all(a.index == 1 for a in b.base.assoc.values())


def test_e2_names():
    assert build_graded_lines(sign=-1).base.cat.name == "E2_z3_minus"
    assert build_graded_lines(sign=1).base.cat.name == "E2_z3_plus"


def test_semion_structure():
    b = build_semion()
    m = b.base
    assert m.a(1, 1, 1) == MorId(1, 1, 4)
    assert m.a(1, 1, 0) == m.cat.id(0) and m.a(0, 1, 1) == m.cat.id(0)
    assert m.a(1, 0, 1) == m.cat.id(0)
    q = b.beta[(1, 1)].index
    assert q * q % 5 == 4
    assert validate_braiding(b).ok and O.braiding_ok(b)


def test_semion_needs_square_root_of_minus_one():
    with pytest.raises(ValueError):
        build_semion(3)


def test_e1_modulus_bound():
    with pytest.raises(ValueError):
        build_three_object_gv(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_e1_is_gv_with_dualizing_k(n):
    m = build_three_object_gv(n)
    assert validate_monoidal(m).ok and O.monoidal_ok(m)
    K = m.cat.obj("K")
    assert K in O.dualizing_objects(m)
    assert K in [g.K for g in find_dualizing(m)]


def test_trivial():
    b = build_trivial_braided()
    assert b.base.cat.n == 1
    assert O.braiding_ok(b)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3), st.integers(2, 5), st.integers(0, 4), st.sampled_from([1, -1]))
def test_graded_lines_validator_matches_oracle(order, modulus, q, omega):
    q %= modulus
    if q == 0:
        q = 1
    # omega = -1 is a cocycle only on ℤ/2
    if omega == -1 and order != 2:
        omega = 1
    b = build_graded_lines(order, modulus, q=q, omega=omega)
    assert validate_monoidal(b.base).ok == O.monoidal_ok(b.base)
    assert validate_braiding(b).ok == O.braiding_ok(b)
