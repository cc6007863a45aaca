import pytest
from conftest import bundled
from hypothesis import given, settings, strategies as st

from gvcat.core import FinCategory, StructureError
from gvcat.corpus import CORPUS, bundled_path
from gvcat.fileformat import FORMAT_HEADER, CategoryFile, ParseError, dump, load, parse, serialize

SMALL = """gvcat-category 1
name tiny
objects A B
hom A A : a
hom A B : f g
hom B B : b
id A = a
id B = b
"""


def test_roundtrip_bundled(corpus_file):
    name, cf = corpus_file
    text = bundled_path(name).read_text(encoding="utf-8")
    again = parse(text)
    assert again.same_tables(cf)
    assert serialize(again) == text


def test_parse_accepts_bytes():
    cf = parse(SMALL.encode())
    assert list(cf.cat.objects) == ["A", "B"]
    assert cf.cat.hom_size(0, 1) == 2 and cf.cat.hom_size(1, 0) == 0


def test_identity_composites_are_filled_in():
    cf = parse(SMALL)
    f = cf.cat.hom(0, 1)[1]
    assert cf.cat.compose(cf.cat.id(1), f) == f
    assert cf.cat.compose(f, cf.cat.id(0)) == f


def test_dump_and_load(tmp_path):
    cf = bundled("e1_z5")
    p = tmp_path / "x.cat"
    dump(cf, p)
    assert load(p).same_tables(cf)


def test_empty_category_is_valid():
    cf = parse(f"{FORMAT_HEADER}\nname empty\nobjects\n")
    assert cf.cat.n == 0
    assert serialize(cf) == serialize(parse(serialize(cf)))


def test_comments_and_blank_lines():
    text = SMALL.replace("hom A A : a", "# a comment\n\nhom A A : a   # trailing")
    assert parse(text).cat.same_tables(parse(SMALL).cat)


def test_bad_header():
    with pytest.raises(ParseError, match="first line"):
        parse("gvcat-category 2\nobjects\n")


def test_undefined_label_names_label_and_line():
    text = SMALL + "comp zz a = a\n"
    with pytest.raises(ParseError) as info:
        parse(text)
    assert "zz" in str(info.value)
    assert info.value.line == 9
    assert "line 9" in str(info.value)


def test_duplicate_label():
    text = SMALL.replace("hom B B : b", "hom B B : f")
    with pytest.raises(ParseError, match="'f'"):
        parse(text)


def test_missing_composite():
    text = """gvcat-category 1
name m
objects A
hom A A : e x y
id A = e
comp x x = y
"""
    with pytest.raises(ParseError, match="missing composite"):
        parse(text)


def test_unknown_object_and_keyword():
    with pytest.raises(ParseError, match="unknown object 'C'"):
        parse(SMALL + "hom C A : c\n")
    with pytest.raises(ParseError, match="unknown keyword"):
        parse(SMALL + "frobnicate A\n")


def test_wrong_endpoints_in_comp():
    with pytest.raises(ParseError, match="not composable"):
        parse(SMALL + "comp f f = f\n")


def test_incomplete_monoidal_block():
    text = bundled_path("e2_minus").read_text()
    lines = [ln for ln in text.splitlines() if not ln.startswith("assoc 1 1 1")]
    with pytest.raises(ParseError, match="associator"):
        parse("\n".join(lines) + "\n")


def test_braiding_needs_monoidal():
    with pytest.raises(ParseError, match="braiding without"):
        parse(SMALL + "braid A A = a\n")


def test_bad_token_rejected_on_serialize():
    cf = parse(SMALL)
    homs = dict(cf.cat.homs)
    homs[(0, 1)] = ["f=1", "g"]
    bad = FinCategory(cf.cat.name, cf.cat.objects, homs, cf.cat.comp, cf.cat.ids)
    with pytest.raises(StructureError):
        serialize(CategoryFile(bad))


BASE_LINES = bundled_path("e2_minus").read_text().splitlines()


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_fuzzed_files_raise_only_parse_errors(data):
    lines = list(BASE_LINES)
    for _ in range(data.draw(st.integers(1, 3))):
        op = data.draw(st.sampled_from(["drop", "dup", "swap", "edit"]))
        i = data.draw(st.integers(0, len(lines) - 1))
        if op == "drop":
            del lines[i]
        elif op == "dup":
            lines.insert(i, lines[i])
        elif op == "swap":
            j = data.draw(st.integers(0, len(lines) - 1))
            lines[i], lines[j] = lines[j], lines[i]
        else:
            words = lines[i].split(" ")
            k = data.draw(st.integers(0, len(words) - 1))
            words[k] = data.draw(st.sampled_from(["=", ":", "", "zz", "0", "1@1>1", "0@0>1", "#"]))
            lines[i] = " ".join(words)
        if not lines:
            break
    try:
        parse("\n".join(lines) + "\n")
    except StructureError:
        pass


@settings(max_examples=100, deadline=None)
@given(st.binary(max_size=200))
def test_random_bytes_raise_only_parse_errors(raw):
    try:
        parse(FORMAT_HEADER.encode() + b"\n" + raw)
    except StructureError:
        pass
