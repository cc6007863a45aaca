"""The textual category format (version 1).

A file is a sequence of lines; ``#`` starts a comment.  Labels and object
names are single tokens and must be unique across the whole file::

    gvcat-category 1
    name E1_z5
    objects 0 1 K
    hom 1 1 : 0@1>1 1@1>1 2@1>1 3@1>1 4@1>1
    id 1 = 1@1>1
    comp g f = r            # g∘f; pairs involving an identity may be omitted
    monoidal
    unit 1
    tensor X Y = Z
    tmor f g = h            # f⊗g
    assoc X Y Z = a         # (X⊗Y)⊗Z → X⊗(Y⊗Z)
    lunit X = l
    runit X = r
    braid X Y = b
    gv K
    ev Y DY = e             # optional: e: DY⊗Y → K

Hom-sets that are not listed are empty.  Morphism order inside a hom-set
is the order of its ``hom`` line, which fixes the morphism indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FinCategory, MorId, StructureError
from .duality import GVData, dualizing_from_K, gv_from_ev
from .monoidal import BraidingData, MonoidalData

__all__ = ["FORMAT_HEADER", "ParseError", "CategoryFile", "parse", "serialize", "load", "dump"]

FORMAT_HEADER = "gvcat-category 1"
_TOKEN = re.compile(r"^[^\s=:#]+$")


class ParseError(StructureError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass(frozen=True, eq=False)
class CategoryFile:
    cat: FinCategory
    monoidal: MonoidalData | None = None
    braiding: BraidingData | None = None
    K: int | None = None
    ev: tuple[tuple[int, MorId], ...] | None = None   # (DY, ev_Y) per object

    @property
    def name(self) -> str:
        return self.cat.name

    def gv(self) -> GVData | None:
        """The declared GV structure, or None if the file has no gv line."""
        if self.K is None or self.monoidal is None:
            return None
        if self.ev is None:
            gv = dualizing_from_K(self.monoidal, self.K)
            if gv is None:
                raise StructureError(f"declared K = {self.cat.objects[self.K]} is not dualizing")
            return gv
        return gv_from_ev(self.monoidal, self.K, [o for o, _ in self.ev], [e for _, e in self.ev])

    def same_tables(self, other: "CategoryFile") -> bool:
        if not self.cat.same_tables(other.cat) or self.cat.name != other.cat.name:
            return False
        if (self.monoidal is None) != (other.monoidal is None):
            return False
        if self.monoidal is not None and not self.monoidal.same_tables(other.monoidal):
            return False
        if (self.braiding is None) != (other.braiding is None):
            return False
        if self.braiding is not None and self.braiding.beta != other.braiding.beta:
            return False
        return self.K == other.K and self.ev == other.ev


def _check_token(tok: str, what: str) -> None:
    if not _TOKEN.match(tok):
        raise StructureError(f"{what} {tok!r} is not a single token without '=', ':' or '#'")


def serialize(cf: CategoryFile) -> str:
    cat = cf.cat
    _check_token(cat.name, "name")
    for o in cat.objects:
        _check_token(o, "object")
    seen = set()
    for m in cat.morphisms:
        lab = cat.label(m)
        _check_token(lab, "label")
        if lab in seen:
            raise StructureError(f"label {lab!r} is used twice")
        seen.add(lab)
    ob, lab = cat.objects, cat.label
    out = [FORMAT_HEADER, f"name {cat.name}", " ".join(["objects"] + list(ob))]
    for x in range(cat.n):
        for y in range(cat.n):
            if cat.hom_size(x, y):
                out.append(" ".join([f"hom {ob[x]} {ob[y]} :"] + list(cat.homs[(x, y)])))
    for x in range(cat.n):
        out.append(f"id {ob[x]} = {lab(cat.id(x))}")
    for (g, f), r in cat.comp.items():
        if cat.is_identity(g) or cat.is_identity(f):
            continue
        out.append(f"comp {lab(g)} {lab(f)} = {lab(r)}")
    m = cf.monoidal
    if m is not None:
        out.append("monoidal")
        out.append(f"unit {ob[m.unit]}")
        for x in range(cat.n):
            for y in range(cat.n):
                out.append(f"tensor {ob[x]} {ob[y]} = {ob[m.t(x, y)]}")
        for (f, g), h in m.tensor_mor.items():
            out.append(f"tmor {lab(f)} {lab(g)} = {lab(h)}")
        for (x, y, z), a in m.assoc.items():
            out.append(f"assoc {ob[x]} {ob[y]} {ob[z]} = {lab(a)}")
        for x in range(cat.n):
            out.append(f"lunit {ob[x]} = {lab(m.l(x))}")
        for x in range(cat.n):
            out.append(f"runit {ob[x]} = {lab(m.r(x))}")
    if cf.braiding is not None:
        for (x, y), b in cf.braiding.beta.items():
            out.append(f"braid {ob[x]} {ob[y]} = {lab(b)}")
    if cf.K is not None:
        out.append(f"gv {ob[cf.K]}")
        if cf.ev is not None:
            for y, (d, e) in enumerate(cf.ev):
                out.append(f"ev {ob[y]} {ob[d]} = {lab(e)}")
    return "\n".join(out) + "\n"


def _split_eq(words: list[str], nleft: int, line: int) -> tuple[list[str], str]:
    if len(words) != nleft + 2 or words[nleft] != "=":
        raise ParseError(f"expected {nleft} tokens, '=' and one token", line)
    return words[:nleft], words[nleft + 1]


def parse(text: str | bytes) -> CategoryFile:
    """Parse a category file; errors carry the offending line number."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    lines = []
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((i, body.split()))
    if not lines or " ".join(lines[0][1]) != FORMAT_HEADER:
        raise ParseError(f"first line must be {FORMAT_HEADER!r}", lines[0][0] if lines else None)
    name = None
    objects: list[str] | None = None
    homs: dict[tuple[int, int], list[str]] = {}
    ids: dict[int, str] = {}
    comps: list[tuple[int, str, str, str]] = []
    mon: dict | None = None
    braids: list[tuple[int, str, str, str]] = []
    gv_K: tuple[int, str] | None = None
    evs: list[tuple[int, str, str, str]] = []
    mon_lines: dict[str, list] = {k: [] for k in ("tensor", "tmor", "assoc", "lunit", "runit")}

    def obj_index(tok: str, line: int) -> int:
        if objects is None:
            raise ParseError("objects must be declared first", line)
        try:
            return objects.index(tok)
        except ValueError:
            raise ParseError(f"unknown object {tok!r}", line) from None

    for line, words in lines[1:]:
        kw, rest = words[0], words[1:]
        if kw == "name":
            if len(rest) != 1:
                raise ParseError("name takes one token", line)
            name = rest[0]
        elif kw == "objects":
            if objects is not None:
                raise ParseError("objects declared twice", line)
            objects = list(rest)
            if len(set(objects)) != len(objects):
                raise ParseError("duplicate object name", line)
        elif kw == "hom":
            if len(rest) < 3 or rest[2] != ":":
                raise ParseError("expected 'hom X Y : labels...'", line)
            key = (obj_index(rest[0], line), obj_index(rest[1], line))
            if key in homs:
                raise ParseError(f"hom {rest[0]} {rest[1]} declared twice", line)
            homs[key] = rest[3:]
        elif kw == "id":
            (x,), lab = _split_eq(rest, 1, line)
            ids[obj_index(x, line)] = lab
            ids.setdefault(-1, "")
        elif kw == "comp":
            (g, f), r = _split_eq(rest, 2, line)
            comps.append((line, g, f, r))
        elif kw == "monoidal":
            mon = {}
        elif kw == "unit":
            if mon is None:
                raise ParseError("unit outside the monoidal block", line)
            if len(rest) != 1:
                raise ParseError("unit takes one object", line)
            mon["unit"] = obj_index(rest[0], line)
        elif kw in mon_lines:
            if mon is None:
                raise ParseError(f"{kw} outside the monoidal block", line)
            arity = {"tensor": 2, "tmor": 2, "assoc": 3, "lunit": 1, "runit": 1}[kw]
            left, right = _split_eq(rest, arity, line)
            mon_lines[kw].append((line, left, right))
        elif kw == "braid":
            (x, y), b = _split_eq(rest, 2, line)
            braids.append((line, x, y, b))
        elif kw == "gv":
            if len(rest) != 1:
                raise ParseError("gv takes one object", line)
            gv_K = (line, rest[0])
        elif kw == "ev":
            (y, d), e = _split_eq(rest, 2, line)
            evs.append((line, y, d, e))
        else:
            raise ParseError(f"unknown keyword {kw!r}", line)

    if objects is None:
        raise ParseError("missing objects line")
    ids.pop(-1, None)
    n = len(objects)
    full = {(x, y): tuple(homs.get((x, y), ())) for x in range(n) for y in range(n)}
    by_label: dict[str, MorId] = {}
    for (x, y), labs in full.items():
        for i, lab in enumerate(labs):
            if lab in by_label:
                raise ParseError(f"label {lab!r} is used twice")
            by_label[lab] = MorId(x, y, i)

    def mor(lab: str, line: int) -> MorId:
        try:
            return by_label[lab]
        except KeyError:
            raise ParseError(f"undefined morphism label {lab!r}", line) from None

    ident = {}
    for x in range(n):
        if x not in ids:
            raise ParseError(f"no identity declared for object {objects[x]!r}")
        m = by_label.get(ids[x])
        if m is None or m.src != x or m.dst != x:
            raise ParseError(f"identity of {objects[x]!r} must be an endomorphism label, got {ids[x]!r}")
        ident[x] = m
    comp: dict[tuple[MorId, MorId], MorId] = {}
    for line, g, f, r in comps:
        G, F, R = mor(g, line), mor(f, line), mor(r, line)
        if F.dst != G.src:
            raise ParseError(f"{g} and {f} are not composable", line)
        if R.src != F.src or R.dst != G.dst:
            raise ParseError(f"{r} has the wrong endpoints for {g}∘{f}", line)
        comp[(G, F)] = R
    id_set = set(ident.values())
    table = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for i in range(len(full[(x, y)])):
                    F = MorId(x, y, i)
                    for j in range(len(full[(y, z)])):
                        G = MorId(y, z, j)
                        if (G, F) in comp:
                            table[(G, F)] = comp[(G, F)]
                        elif G in id_set:
                            table[(G, F)] = F
                        elif F in id_set:
                            table[(G, F)] = G
                        else:
                            raise ParseError(f"missing composite {full[(y, z)][j]}∘{full[(x, y)][i]}")
    cat = FinCategory(name or "unnamed", tuple(objects), full, table,
                      tuple(ident[x] for x in range(n)))

    monoidal = None
    if mon is not None:
        if "unit" not in mon:
            raise ParseError("monoidal block without unit")
        tobj = {}
        for line, (x, y), z in mon_lines["tensor"]:
            tobj[(obj_index(x, line), obj_index(y, line))] = obj_index(z, line)
        missing = [(x, y) for x in range(n) for y in range(n) if (x, y) not in tobj]
        if missing:
            x, y = missing[0]
            raise ParseError(f"missing tensor {objects[x]} {objects[y]}")
        tmor = {}
        for line, (f, g), h in mon_lines["tmor"]:
            F, G, H = mor(f, line), mor(g, line), mor(h, line)
            if H.src != tobj[(F.src, G.src)] or H.dst != tobj[(F.dst, G.dst)]:
                raise ParseError(f"{h} has the wrong endpoints for {f}⊗{g}", line)
            tmor[(F, G)] = H
        for F in cat.morphisms:
            for G in cat.morphisms:
                if (F, G) not in tmor:
                    raise ParseError(f"missing tmor {cat.label(F)} {cat.label(G)}")
        assoc = {}
        for line, (x, y, z), a in mon_lines["assoc"]:
            X, Y, Z = (obj_index(t, line) for t in (x, y, z))
            A = mor(a, line)
            if A.src != tobj[(tobj[(X, Y)], Z)] or A.dst != tobj[(X, tobj[(Y, Z)])]:
                raise ParseError(f"associator {a} has the wrong endpoints", line)
            assoc[(X, Y, Z)] = A
        if len(assoc) != n ** 3:
            raise ParseError("associator table is incomplete")
        unitors = {}
        for kw in ("lunit", "runit"):
            comps_ = {}
            for line, (x,), u in mon_lines[kw]:
                X = obj_index(x, line)
                U = mor(u, line)
                src = tobj[(mon["unit"], X)] if kw == "lunit" else tobj[(X, mon["unit"])]
                if U.src != src or U.dst != X:
                    raise ParseError(f"{kw} {u} has the wrong endpoints", line)
                comps_[X] = U
            if len(comps_) != n:
                raise ParseError(f"{kw} table is incomplete")
            unitors[kw] = tuple(comps_[x] for x in range(n))
        # keep the insertion order canonical
        tmor = {(F, G): tmor[(F, G)] for F in cat.morphisms for G in cat.morphisms}
        assoc = {(x, y, z): assoc[(x, y, z)] for x in range(n) for y in range(n) for z in range(n)}
        tobj = {(x, y): tobj[(x, y)] for x in range(n) for y in range(n)}
        monoidal = MonoidalData(cat, mon["unit"], tobj, tmor, assoc,
                                unitors["lunit"], unitors["runit"])

    braiding = None
    if braids:
        if monoidal is None:
            raise ParseError("braiding without a monoidal block", braids[0][0])
        beta = {}
        for line, x, y, b in braids:
            X, Y, B = obj_index(x, line), obj_index(y, line), mor(b, line)
            if B.src != monoidal.t(X, Y) or B.dst != monoidal.t(Y, X):
                raise ParseError(f"braiding {b} has the wrong endpoints", line)
            beta[(X, Y)] = B
        if len(beta) != n * n:
            raise ParseError("braiding table is incomplete")
        braiding = BraidingData(monoidal, {(x, y): beta[(x, y)] for x in range(n) for y in range(n)})

    K = ev = None
    if gv_K is not None:
        if monoidal is None:
            raise ParseError("gv without a monoidal block", gv_K[0])
        K = obj_index(gv_K[1], gv_K[0])
        if evs:
            got = {}
            for line, y, d, e in evs:
                Y, Dy, E = obj_index(y, line), obj_index(d, line), mor(e, line)
                if E.src != monoidal.t(Dy, Y) or E.dst != K:
                    raise ParseError(f"ev {e} must go from {d}⊗{y} to the dualizing object", line)
                got[Y] = (Dy, E)
            if len(got) != n:
                raise ParseError("ev table is incomplete")
            ev = tuple(got[y] for y in range(n))
    elif evs:
        raise ParseError("ev lines without a gv line", evs[0][0])
    return CategoryFile(cat, monoidal, braiding, K, ev)


def load(path) -> CategoryFile:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(cf: CategoryFile, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(cf))
