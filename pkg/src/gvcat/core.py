"""Finite categories, functors of both variances, and natural families.

Everything is a full table.  A morphism is addressed positionally as
``MorId(src, dst, index)``; labels exist only for I/O.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "MorId", "StructureError", "TheoremViolation", "ValidationReport",
    "FinCategory", "Functor", "NatFamily",
    "validate_category", "compose", "opposite", "validate_functor",
    "check_naturality", "enumerate_nat_isos", "is_isomorphism",
    "identity_functor", "compose_functors", "full_subcategory",
]

MAX_LISTED = 10


class MorId(NamedTuple):
    src: int
    dst: int
    index: int


class StructureError(ValueError):
    """Input tables are malformed or an operation's precondition fails."""


class TheoremViolation(RuntimeError):
    """A property guaranteed by theory failed to hold: an engine bug."""


@dataclass
class ValidationReport:
    subject: str = ""
    structural: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.structural and not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)

    def malformed(self, msg: str) -> None:
        self.structural.append(msg)

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        self.structural.extend(prefix + s for s in other.structural)
        self.violations.extend(prefix + s for s in other.violations)

    def raise_for_theorem(self) -> None:
        if not self.ok:
            msgs = self.structural + self.violations
            raise TheoremViolation(f"{self.subject}: " + "; ".join(msgs[:MAX_LISTED]))

    def raise_for_input(self) -> None:
        if not self.ok:
            msgs = self.structural + self.violations
            raise StructureError(f"{self.subject}: " + "; ".join(msgs[:MAX_LISTED]))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "structural": list(self.structural),
            "violations": list(self.violations),
            "info": self.info,
        }


@dataclass(frozen=True, eq=False)
class FinCategory:
    """A finite category.

    ``homs[(x, y)]`` lists the labels of Hom(x, y) and must be present for
    every ordered pair.  ``comp[(g, f)]`` is g∘f for composable (g, f).
    """

    name: str
    objects: tuple[str, ...]
    homs: dict[tuple[int, int], tuple[str, ...]]
    comp: dict[tuple[MorId, MorId], MorId]
    ids: tuple[MorId, ...]

    @classmethod
    def build(
        cls,
        name: str,
        objects: Sequence[str],
        homs: dict[tuple[int, int], Sequence[str]],
        compose_fn: Callable[[MorId, MorId], MorId],
        identity_fn: Callable[[int], MorId],
    ) -> "FinCategory":
        n = len(objects)
        homs = {(x, y): tuple(homs.get((x, y), ())) for x in range(n) for y in range(n)}
        comp = {}
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    for i in range(len(homs[(x, y)])):
                        f = MorId(x, y, i)
                        for j in range(len(homs[(y, z)])):
                            g = MorId(y, z, j)
                            comp[(g, f)] = compose_fn(g, f)
        ids = tuple(identity_fn(x) for x in range(n))
        return cls(name, tuple(objects), homs, comp, ids)

    @property
    def n(self) -> int:
        return len(self.objects)

    def hom(self, x: int, y: int) -> list[MorId]:
        return [MorId(x, y, i) for i in range(len(self.homs[(x, y)]))]

    def hom_size(self, x: int, y: int) -> int:
        return len(self.homs[(x, y)])

    @cached_property
    def morphisms(self) -> tuple[MorId, ...]:
        return tuple(m for x in range(self.n) for y in range(self.n) for m in self.hom(x, y))

    def label(self, m: MorId) -> str:
        return self.homs[(m.src, m.dst)][m.index]

    @cached_property
    def by_label(self) -> dict[str, MorId]:
        return {self.label(m): m for m in self.morphisms}

    def obj(self, label: str) -> int:
        return self.objects.index(label)

    def id(self, x: int) -> MorId:
        return self.ids[x]

    def compose(self, g: MorId, f: MorId) -> MorId:
        if f.dst != g.src:
            raise StructureError(
                f"{self.name}: cannot compose {self.label(g)} after {self.label(f)}")
        return self.comp[(g, f)]

    def seq(self, *ms: MorId) -> MorId:
        """Compose in diagrammatic order: ``seq(f, g, h) = h∘g∘f``."""
        out = ms[0]
        for m in ms[1:]:
            out = self.compose(m, out)
        return out

    def is_identity(self, m: MorId) -> bool:
        return m.src == m.dst and self.ids[m.src] == m

    @cached_property
    def _inverses(self) -> dict[MorId, MorId]:
        inv = {}
        for m in self.morphisms:
            for k in self.hom(m.dst, m.src):
                if self.comp[(k, m)] == self.ids[m.src] and self.comp[(m, k)] == self.ids[m.dst]:
                    inv[m] = k
                    break
        return inv

    def inverse(self, m: MorId) -> MorId | None:
        return self._inverses.get(m)

    def inv(self, m: MorId) -> MorId:
        k = self._inverses.get(m)
        if k is None:
            raise StructureError(f"{self.name}: {self.label(m)} is not invertible")
        return k

    def isos(self, x: int, y: int) -> list[MorId]:
        return [m for m in self.hom(x, y) if m in self._inverses]

    def isomorphic(self, x: int, y: int) -> bool:
        return any(m in self._inverses for m in self.hom(x, y))

    def iso_closure(self, objs: Iterable[int]) -> set[int]:
        objs = set(objs)
        return {y for y in range(self.n) if any(self.isomorphic(x, y) for x in objs)}

    def same_tables(self, other: "FinCategory") -> bool:
        return (self.objects == other.objects and self.homs == other.homs
                and self.comp == other.comp and self.ids == other.ids)

    def __repr__(self) -> str:
        return f"FinCategory({self.name!r}, {self.n} objects, {len(self.morphisms)} morphisms)"


def compose(cat: FinCategory, g: MorId, f: MorId) -> MorId:
    return cat.compose(g, f)


def is_isomorphism(cat: FinCategory, m: MorId) -> MorId | None:
    return cat.inverse(m)


def _check_structure(cat: FinCategory, report: ValidationReport) -> None:
    n = cat.n
    for x in range(n):
        for y in range(n):
            if (x, y) not in cat.homs:
                report.malformed(f"missing hom-set ({cat.objects[x]}, {cat.objects[y]})")
    if report.structural:
        return
    if len(cat.ids) != n:
        report.malformed(f"identity table has {len(cat.ids)} entries for {n} objects")
        return
    for x, m in enumerate(cat.ids):
        if not (m.src == x and m.dst == x and 0 <= m.index < cat.hom_size(x, x)):
            report.malformed(f"identity of {cat.objects[x]} is not an endomorphism of it")
    expected = set()
    for f in cat.morphisms:
        for z in range(n):
            for g in cat.hom(f.dst, z):
                expected.add((g, f))
                r = cat.comp.get((g, f))
                if r is None:
                    report.malformed(f"composition {cat.label(g)}∘{cat.label(f)} undefined")
                elif not (r.src == f.src and r.dst == g.dst
                          and 0 <= r.index < cat.hom_size(r.src, r.dst)):
                    report.malformed(
                        f"composition {cat.label(g)}∘{cat.label(f)} lands outside "
                        f"Hom({cat.objects[f.src]}, {cat.objects[g.dst]})")
    for key in cat.comp:
        if key not in expected:
            report.malformed(f"composition defined on non-composable pair {key}")


def validate_category(cat: FinCategory) -> ValidationReport:
    """Check the identity and associativity laws exhaustively.

    Structural problems (missing or out-of-range entries) are reported in
    ``structural``; axiom failures name the witnessing pair or triple.
    """
    report = ValidationReport(subject=f"category {cat.name}")
    _check_structure(cat, report)
    if report.structural:
        return report
    lab = cat.label
    for f in cat.morphisms:
        if cat.comp[(cat.ids[f.dst], f)] != f:
            report.fail(f"left identity fails for {lab(f)}")
        if cat.comp[(f, cat.ids[f.src])] != f:
            report.fail(f"right identity fails for {lab(f)}")
    comp = cat.comp
    for f in cat.morphisms:
        for y in range(cat.n):
            for g in cat.hom(f.dst, y):
                gf = comp[(g, f)]
                for z in range(cat.n):
                    for h in cat.hom(y, z):
                        if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                            report.fail(
                                f"associativity fails for ({lab(h)}, {lab(g)}, {lab(f)})")
    return report


def opposite(cat: FinCategory) -> FinCategory:
    name = cat.name[:-3] if cat.name.endswith("^op") else cat.name + "^op"
    homs = {(x, y): cat.homs[(y, x)] for (x, y) in cat.homs}
    flip = lambda m: MorId(m.dst, m.src, m.index)  # noqa: E731
    comp = {(flip(f), flip(g)): flip(r) for (g, f), r in cat.comp.items()}
    ids = tuple(flip(m) for m in cat.ids)
    return FinCategory(name, cat.objects, homs, comp, ids)


@dataclass(frozen=True, eq=False)
class Functor:
    """A functor ``src → dst``; ``variance`` is ``"co"`` or ``"contra"``."""

    src: FinCategory
    dst: FinCategory
    obj_map: tuple[int, ...]
    mor_map: dict[MorId, MorId]
    variance: str = "co"

    def __call__(self, a):
        if isinstance(a, MorId):
            return self.mor_map[a]
        return self.obj_map[a]

    @property
    def contravariant(self) -> bool:
        return self.variance == "contra"

    def same_tables(self, other: "Functor") -> bool:
        return (self.variance == other.variance and self.obj_map == other.obj_map
                and self.mor_map == other.mor_map)


def identity_functor(cat: FinCategory) -> Functor:
    return Functor(cat, cat, tuple(range(cat.n)), {m: m for m in cat.morphisms})


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G∘F; the variance is the product of the variances."""
    variance = "co" if G.variance == F.variance else "contra"
    return Functor(
        F.src, G.dst,
        tuple(G.obj_map[F.obj_map[x]] for x in range(F.src.n)),
        {m: G.mor_map[F.mor_map[m]] for m in F.src.morphisms},
        variance,
    )


def validate_functor(F: Functor, src: FinCategory, dst: FinCategory) -> ValidationReport:
    report = ValidationReport(subject=f"{F.variance}variant functor {src.name} → {dst.name}")
    if len(F.obj_map) != src.n or any(not 0 <= y < dst.n for y in F.obj_map):
        report.malformed("object map is not a total map into the target objects")
        return report
    for m in src.morphisms:
        im = F.mor_map.get(m)
        if im is None:
            report.malformed(f"morphism {src.label(m)} has no image")
            continue
        want = ((F.obj_map[m.dst], F.obj_map[m.src]) if F.contravariant
                else (F.obj_map[m.src], F.obj_map[m.dst]))
        if (im.src, im.dst) != want or not 0 <= im.index < dst.hom_size(*want):
            report.malformed(f"image of {src.label(m)} has the wrong source/target")
    if report.structural:
        return report
    for x in range(src.n):
        if F.mor_map[src.ids[x]] != dst.ids[F.obj_map[x]]:
            report.fail(f"identity of {src.objects[x]} not preserved")
    for (g, f), gf in src.comp.items():
        Fg, Ff = F.mor_map[g], F.mor_map[f]
        want = dst.comp[(Ff, Fg)] if F.contravariant else dst.comp[(Fg, Ff)]
        if F.mor_map[gf] != want:
            report.fail(f"composition {src.label(g)}∘{src.label(f)} not preserved")
    return report


@dataclass(frozen=True, eq=False)
class NatFamily:
    """Components ``source(X) → target(X)`` indexed by object."""

    source: Functor
    target: Functor
    components: tuple[MorId, ...]

    def __getitem__(self, x: int) -> MorId:
        return self.components[x]

    def __len__(self) -> int:
        return len(self.components)


def check_naturality(family: NatFamily, cat: FinCategory) -> ValidationReport:
    F, G = family.source, family.target
    dst = F.dst
    report = ValidationReport(subject="natural family")
    if F.variance != G.variance:
        report.malformed("source and target functors have different variance")
        return report
    if len(family.components) != cat.n:
        report.malformed("wrong number of components")
        return report
    for x, c in enumerate(family.components):
        if (c.src, c.dst) != (F.obj_map[x], G.obj_map[x]):
            report.malformed(f"component at {cat.objects[x]} has the wrong source/target")
    if report.structural:
        return report
    bad = 0
    for m in cat.morphisms:
        if F.contravariant:
            lhs = dst.compose(family[m.src], F(m))
            rhs = dst.compose(G(m), family[m.dst])
        else:
            lhs = dst.compose(G(m), family[m.src])
            rhs = dst.compose(family[m.dst], F(m))
        if lhs != rhs:
            bad += 1
            if bad <= MAX_LISTED:
                report.fail(f"naturality square fails for {cat.label(m)}")
    report.info["failing_squares"] = bad
    return report


def enumerate_nat_isos(F: Functor, G: Functor, cat: FinCategory) -> list[NatFamily]:
    """All natural isomorphisms F ≅ G, lexicographic in component indices.

    Components are fixed in object order; a partial assignment is abandoned
    as soon as a square between already-fixed objects fails.
    """
    if F.variance != G.variance:
        raise StructureError("enumerate_nat_isos needs functors of the same variance")
    dst = F.dst
    n = cat.n
    cands = [dst.isos(F.obj_map[x], G.obj_map[x]) for x in range(n)]
    # morphisms whose square becomes checkable once object k is fixed
    checks: list[list[MorId]] = [[] for _ in range(n)]
    for m in cat.morphisms:
        checks[max(m.src, m.dst)].append(m)

    def square_ok(m: MorId, comps: list[MorId]) -> bool:
        if F.contravariant:
            return dst.compose(comps[m.src], F(m)) == dst.compose(G(m), comps[m.dst])
        return dst.compose(G(m), comps[m.src]) == dst.compose(comps[m.dst], F(m))

    out: list[NatFamily] = []
    comps: list[MorId] = []

    def extend(k: int) -> None:
        if k == n:
            out.append(NatFamily(F, G, tuple(comps)))
            return
        for c in cands[k]:
            comps.append(c)
            if all(square_ok(m, comps) for m in checks[k]):
                extend(k + 1)
            comps.pop()

    extend(0)
    return out


def vertical(cat: FinCategory, beta: NatFamily, alpha: NatFamily) -> NatFamily:
    """(β∘α)_X = β_X∘α_X for covariant families."""
    return NatFamily(alpha.source, beta.target,
                     tuple(cat.compose(b, a) for b, a in zip(beta.components, alpha.components)))


def full_subcategory(cat: FinCategory, objs: Sequence[int], name: str | None = None
                     ) -> tuple[FinCategory, list[int]]:
    """Full subcategory on ``objs`` (kept in ascending order).

    Returns the subcategory and the list mapping new object index → old index.
    Morphism indices inside each hom-set are unchanged.
    """
    keep = sorted(set(objs))
    pos = {old: new for new, old in enumerate(keep)}
    homs = {(pos[x], pos[y]): cat.homs[(x, y)] for x in keep for y in keep}
    comp = {}
    for (g, f), r in cat.comp.items():
        if f.src in pos and f.dst in pos and g.dst in pos:
            comp[(MorId(pos[g.src], pos[g.dst], g.index), MorId(pos[f.src], pos[f.dst], f.index))] = \
                MorId(pos[r.src], pos[r.dst], r.index)
    ids = tuple(MorId(pos[x], pos[x], cat.ids[x].index) for x in keep)
    sub = FinCategory(name or f"{cat.name}|sub", tuple(cat.objects[x] for x in keep), homs, comp, ids)
    return sub, keep


def iter_tuples(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for head in range(n):
        for rest in iter_tuples(n, k - 1):
            yield (head,) + rest
