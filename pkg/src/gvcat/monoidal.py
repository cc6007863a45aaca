"""Monoidal and braided structure on finite categories, with exhaustive coherence checks.

Associators and unitors are always stored; nothing is assumed strict.
Monoidal functors are strong and store their structure in the lax direction
``μ_{X,Y}: F(X)⊗F(Y) → F(X⊗Y)`` together with ``ε: 𝟙 → F(𝟙)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    MAX_LISTED, FinCategory, Functor, MorId, NatFamily, StructureError,
    ValidationReport, validate_category, validate_functor,
)

__all__ = [
    "MonoidalData", "BraidingData", "MonoidalFunctorData",
    "validate_monoidal", "tensor_mor", "validate_braiding", "validate_monoidal_functor",
    "opposite_braiding", "identity_monoidal_functor", "check_monoidal_transformation",
    "braided_functor_report", "invertible_objects",
]


@dataclass(frozen=True, eq=False)
class MonoidalData:
    cat: FinCategory
    unit: int
    tensor_obj: dict[tuple[int, int], int]
    tensor_mor: dict[tuple[MorId, MorId], MorId]
    assoc: dict[tuple[int, int, int], MorId]
    lunit: tuple[MorId, ...]
    runit: tuple[MorId, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.cat.n

    def t(self, x: int, y: int) -> int:
        return self.tensor_obj[(x, y)]

    def tm(self, f: MorId, g: MorId) -> MorId:
        return self.tensor_mor[(f, g)]

    def a(self, x: int, y: int, z: int) -> MorId:
        return self.assoc[(x, y, z)]

    def ainv(self, x: int, y: int, z: int) -> MorId:
        return self.cat.inv(self.assoc[(x, y, z)])

    def l(self, x: int) -> MorId:
        return self.lunit[x]

    def r(self, x: int) -> MorId:
        return self.runit[x]

    def linv(self, x: int) -> MorId:
        return self.cat.inv(self.lunit[x])

    def rinv(self, x: int) -> MorId:
        return self.cat.inv(self.runit[x])

    def lw(self, x: int, f: MorId) -> MorId:
        """id_x ⊗ f"""
        return self.tensor_mor[(self.cat.id(x), f)]

    def rw(self, f: MorId, y: int) -> MorId:
        """f ⊗ id_y"""
        return self.tensor_mor[(f, self.cat.id(y))]

    def same_tables(self, other: "MonoidalData") -> bool:
        return (self.cat.same_tables(other.cat) and self.unit == other.unit
                and self.tensor_obj == other.tensor_obj and self.tensor_mor == other.tensor_mor
                and self.assoc == other.assoc and self.lunit == other.lunit
                and self.runit == other.runit)


def tensor_mor(m: MonoidalData, f: MorId, g: MorId) -> MorId:
    return m.tensor_mor[(f, g)]


class _Lister:
    """Collects violations, keeping only the first few of each kind verbatim."""

    def __init__(self, report: ValidationReport):
        self.report = report
        self.counts: dict[str, int] = {}

    def __call__(self, kind: str, msg: str) -> None:
        c = self.counts.get(kind, 0) + 1
        self.counts[kind] = c
        if c <= MAX_LISTED:
            self.report.fail(f"{kind}: {msg}")

    def finish(self) -> None:
        for kind, c in self.counts.items():
            if c > MAX_LISTED:
                self.report.fail(f"{kind}: {c - MAX_LISTED} further violations")
        self.report.info["violation_counts"] = dict(sorted(self.counts.items()))


def _in_hom(cat: FinCategory, m, x: int, y: int) -> bool:
    return (isinstance(m, MorId) and m.src == x and m.dst == y
            and 0 <= m.index < cat.hom_size(x, y))


def _check_monoidal_structure(m: MonoidalData, report: ValidationReport) -> None:
    cat, n = m.cat, m.cat.n
    if n == 0:
        return
    if not 0 <= m.unit < n:
        report.malformed("unit object out of range")
        return
    for x in range(n):
        for y in range(n):
            z = m.tensor_obj.get((x, y))
            if z is None or not 0 <= z < n:
                report.malformed(f"tensor of objects ({cat.objects[x]}, {cat.objects[y]}) missing or out of range")
    if report.structural:
        return
    for f in cat.morphisms:
        for g in cat.morphisms:
            h = m.tensor_mor.get((f, g))
            if not _in_hom(cat, h, m.t(f.src, g.src), m.t(f.dst, g.dst)):
                report.malformed(f"tensor of morphisms ({cat.label(f)}, {cat.label(g)}) missing or ill-typed")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a = m.assoc.get((x, y, z))
                if not _in_hom(cat, a, m.t(m.t(x, y), z), m.t(x, m.t(y, z))):
                    report.malformed(f"associator at ({cat.objects[x]}, {cat.objects[y]}, {cat.objects[z]}) missing or ill-typed")
    if len(m.lunit) != n or len(m.runit) != n:
        report.malformed("unitor tables have the wrong length")
        return
    for x in range(n):
        if not _in_hom(cat, m.lunit[x], m.t(m.unit, x), x):
            report.malformed(f"left unitor at {cat.objects[x]} ill-typed")
        if not _in_hom(cat, m.runit[x], m.t(x, m.unit), x):
            report.malformed(f"right unitor at {cat.objects[x]} ill-typed")


def validate_monoidal(m: MonoidalData, check_category: bool = True) -> ValidationReport:
    """Bifunctoriality, naturality and invertibility of a/l/r, pentagon, triangle."""
    report = ValidationReport(subject=f"monoidal structure on {m.cat.name}")
    cat = m.cat
    if check_category:
        report.merge(validate_category(cat), "category: ")
        if not report.ok:
            return report
    _check_monoidal_structure(m, report)
    if report.structural:
        return report
    bad = _Lister(report)
    ob = cat.objects
    lab = cat.label
    n = cat.n
    comp, tm, ids = cat.comp, m.tensor_mor, cat.ids

    for x in range(n):
        for y in range(n):
            if tm[(ids[x], ids[y])] != ids[m.t(x, y)]:
                bad("bifunctoriality", f"id_{ob[x]} ⊗ id_{ob[y]} is not an identity")
    for f in cat.morphisms:
        for g in cat.morphisms:
            fg = tm[(f, g)]
            left = comp[(tm[(f, ids[g.dst])], tm[(ids[f.src], g)])]
            right = comp[(tm[(ids[f.dst], g)], tm[(f, ids[g.src])])]
            if fg != left or fg != right:
                bad("bifunctoriality", f"interchange fails for ({lab(f)}, {lab(g)})")
    for (g, f), gf in comp.items():
        for z in range(n):
            if tm[(gf, ids[z])] != comp[(tm[(g, ids[z])], tm[(f, ids[z])])]:
                bad("bifunctoriality", f"(-)⊗{ob[z]} does not preserve {lab(g)}∘{lab(f)}")
            if tm[(ids[z], gf)] != comp[(tm[(ids[z], g)], tm[(ids[z], f)])]:
                bad("bifunctoriality", f"{ob[z]}⊗(-) does not preserve {lab(g)}∘{lab(f)}")

    for key, a in m.assoc.items():
        if cat.inverse(a) is None:
            bad("invertibility", f"associator at {tuple(ob[i] for i in key)} is not invertible")
    for x in range(n):
        if cat.inverse(m.lunit[x]) is None:
            bad("invertibility", f"left unitor at {ob[x]} is not invertible")
        if cat.inverse(m.runit[x]) is None:
            bad("invertibility", f"right unitor at {ob[x]} is not invertible")

    A = m.assoc
    for f in cat.morphisms:
        s, d = f.src, f.dst
        for y in range(n):
            for z in range(n):
                iy, iz = ids[y], ids[z]
                # f in slot 1, 2, 3
                if comp[(tm[(f, tm[(iy, iz)])], A[(s, y, z)])] != comp[(A[(d, y, z)], tm[(tm[(f, iy)], iz)])]:
                    bad("associator naturality", f"({lab(f)}, {ob[y]}, {ob[z]})")
                if comp[(tm[(iy, tm[(f, iz)])], A[(y, s, z)])] != comp[(A[(y, d, z)], tm[(tm[(iy, f)], iz)])]:
                    bad("associator naturality", f"({ob[y]}, {lab(f)}, {ob[z]})")
                if comp[(tm[(iy, tm[(iz, f)])], A[(y, z, s)])] != comp[(A[(y, z, d)], tm[(tm[(iy, iz)], f)])]:
                    bad("associator naturality", f"({ob[y]}, {ob[z]}, {lab(f)})")
        u = ids[m.unit]
        if comp[(f, m.lunit[s])] != comp[(m.lunit[d], tm[(u, f)])]:
            bad("unitor naturality", f"left unitor at {lab(f)}")
        if comp[(f, m.runit[s])] != comp[(m.runit[d], tm[(f, u)])]:
            bad("unitor naturality", f"right unitor at {lab(f)}")

    t = m.t
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    lhs = comp[(A[(x, y, t(z, w))], A[(t(x, y), z, w)])]
                    rhs = cat.seq(tm[(A[(x, y, z)], ids[w])], A[(x, t(y, z), w)],
                                  tm[(ids[x], A[(y, z, w)])])
                    if lhs != rhs:
                        bad("pentagon", f"({ob[x]}, {ob[y]}, {ob[z]}, {ob[w]})")
    for x in range(n):
        for y in range(n):
            lhs = comp[(tm[(ids[x], m.lunit[y])], A[(x, m.unit, y)])]
            if lhs != tm[(m.runit[x], ids[y])]:
                bad("triangle", f"({ob[x]}, {ob[y]})")
    bad.finish()
    return report


@dataclass(frozen=True, eq=False)
class BraidingData:
    base: MonoidalData
    beta: dict[tuple[int, int], MorId]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def b(self, x: int, y: int) -> MorId:
        return self.beta[(x, y)]

    def binv(self, x: int, y: int) -> MorId:
        return self.base.cat.inv(self.beta[(x, y)])

    def plus(self, x: int, y: int) -> MorId:
        """β⁺_{X,Y} = β_{X,Y}"""
        return self.beta[(x, y)]

    def minus(self, x: int, y: int) -> MorId:
        """β⁻_{X,Y} = β_{Y,X}⁻¹"""
        return self.base.cat.inv(self.beta[(y, x)])

    def signed(self, sign: int, x: int, y: int) -> MorId:
        return self.plus(x, y) if sign > 0 else self.minus(x, y)

    def double(self, x: int, y: int) -> MorId:
        """β_{Y,X}∘β_{X,Y}: X⊗Y → X⊗Y"""
        return self.base.cat.compose(self.beta[(y, x)], self.beta[(x, y)])


def validate_braiding(b: BraidingData, check_base: bool = True) -> ValidationReport:
    """Naturality, invertibility, both hexagons and the derived easy square.

    ``info["symmetric"]`` records whether β_{Y,X}∘β_{X,Y} = id everywhere.
    """
    m = b.base
    cat = m.cat
    report = ValidationReport(subject=f"braiding on {cat.name}")
    if check_base:
        report.merge(validate_monoidal(m), "monoidal: ")
        if not report.ok:
            return report
    n = cat.n
    ob, lab = cat.objects, cat.label
    for x in range(n):
        for y in range(n):
            if not _in_hom(cat, b.beta.get((x, y)), m.t(x, y), m.t(y, x)):
                report.malformed(f"braiding at ({ob[x]}, {ob[y]}) missing or ill-typed")
    if report.structural:
        return report
    bad = _Lister(report)
    comp, tm, ids = cat.comp, m.tensor_mor, cat.ids
    B = b.beta
    for key, c in B.items():
        if cat.inverse(c) is None:
            bad("invertibility", f"braiding at ({ob[key[0]]}, {ob[key[1]]}) is not invertible")
    if report.violations:
        bad.finish()
        return report
    for f in cat.morphisms:
        for y in range(n):
            iy = ids[y]
            if comp[(tm[(iy, f)], B[(f.src, y)])] != comp[(B[(f.dst, y)], tm[(f, iy)])]:
                bad("braiding naturality", f"({lab(f)}, {ob[y]})")
            if comp[(tm[(f, iy)], B[(y, f.src)])] != comp[(B[(y, f.dst)], tm[(iy, f)])]:
                bad("braiding naturality", f"({ob[y]}, {lab(f)})")
    t = m.t
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # β_{X,Y⊗Z} = a∘(id_Y⊗β_{X,Z})∘a⁻¹∘(β_{X,Y}⊗id_Z)∘a⁻¹ rearranged
                lhs = cat.seq(m.a(x, y, z), B[(x, t(y, z))], m.a(y, z, x))
                rhs = cat.seq(tm[(B[(x, y)], ids[z])], m.a(y, x, z), tm[(ids[y], B[(x, z)])])
                if lhs != rhs:
                    bad("hexagon 1", f"({ob[x]}, {ob[y]}, {ob[z]})")
                lhs = cat.seq(m.ainv(x, y, z), B[(t(x, y), z)], m.ainv(z, x, y))
                rhs = cat.seq(tm[(ids[x], B[(y, z)])], m.ainv(x, z, y), tm[(B[(x, z)], ids[y])])
                if lhs != rhs:
                    bad("hexagon 2", f"({ob[x]}, {ob[y]}, {ob[z]})")
    if not report.violations:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if not _easy_square(b, x, y, z):
                        bad("double-braiding square", f"({ob[x]}, {ob[y]}, {ob[z]})")
    bad.finish()
    report.info["symmetric"] = all(cat.is_identity(b.double(x, y))
                                   for x in range(n) for y in range(n))
    return report


def _easy_square(b: BraidingData, x: int, y: int, z: int) -> bool:
    """β_{Y,Z⊗X}∘β_{X,Y⊗Z} = β_{X⊗Y,Z}∘((β_{Y,X}β_{X,Y})⊗id_Z), associators inserted."""
    m = b.base
    cat = m.cat
    t = m.t
    # X⊗(Y⊗Z) → (Y⊗Z)⊗X → Y⊗(Z⊗X) → (Z⊗X)⊗Y
    top = cat.seq(b.b(x, t(y, z)), m.a(y, z, x), b.b(y, t(z, x)))
    # X⊗(Y⊗Z) → (X⊗Y)⊗Z → (X⊗Y)⊗Z → Z⊗(X⊗Y) → (Z⊗X)⊗Y
    bottom = cat.seq(m.ainv(x, y, z), m.rw(b.double(x, y), z), b.b(t(x, y), z), m.ainv(z, x, y))
    return top == bottom


def opposite_braiding(b: BraidingData) -> BraidingData:
    """β⁻_{X,Y} = β_{Y,X}⁻¹."""
    cat = b.base.cat
    return BraidingData(b.base, {(x, y): cat.inv(b.beta[(y, x)]) for (x, y) in b.beta})


@dataclass(frozen=True, eq=False)
class MonoidalFunctorData:
    """A strong monoidal functor; ``structure[(X, Y)]: F(X)⊗F(Y) → F(X⊗Y)``."""

    F: Functor
    structure: dict[tuple[int, int], MorId]
    unit_iso: MorId

    def mu(self, x: int, y: int) -> MorId:
        return self.structure[(x, y)]


def identity_monoidal_functor(m: MonoidalData) -> MonoidalFunctorData:
    from .core import identity_functor
    cat = m.cat
    return MonoidalFunctorData(
        identity_functor(cat),
        {(x, y): cat.id(m.t(x, y)) for x in range(cat.n) for y in range(cat.n)},
        cat.id(m.unit) if cat.n else None,
    )


def validate_monoidal_functor(mf: MonoidalFunctorData, src: MonoidalData, dst: MonoidalData
                              ) -> ValidationReport:
    F = mf.F
    C, E = src.cat, dst.cat
    report = ValidationReport(subject=f"monoidal functor {C.name} → {E.name}")
    if F.contravariant:
        report.malformed("monoidal functors must be covariant")
        return report
    report.merge(validate_functor(F, C, E), "functor: ")
    if not report.ok:
        return report
    n = C.n
    ob = C.objects
    for x in range(n):
        for y in range(n):
            if not _in_hom(E, mf.structure.get((x, y)), dst.t(F(x), F(y)), F(src.t(x, y))):
                report.malformed(f"structure map at ({ob[x]}, {ob[y]}) missing or ill-typed")
    if n and not _in_hom(E, mf.unit_iso, dst.unit, F(src.unit)):
        report.malformed("unit isomorphism ill-typed")
    if report.structural:
        return report
    bad = _Lister(report)
    mu = mf.structure
    for key, c in mu.items():
        if E.inverse(c) is None:
            bad("invertibility", f"structure map at ({ob[key[0]]}, {ob[key[1]]})")
    if n and E.inverse(mf.unit_iso) is None:
        bad("invertibility", "unit isomorphism")
    for f in C.morphisms:
        for y in range(n):
            iy = C.id(y)
            Fiy = E.id(F(y))
            if E.compose(F(src.tm(f, iy)), mu[(f.src, y)]) != E.compose(mu[(f.dst, y)], dst.tm(F(f), Fiy)):
                bad("structure naturality", f"({C.label(f)}, {ob[y]})")
            if E.compose(F(src.tm(iy, f)), mu[(y, f.src)]) != E.compose(mu[(y, f.dst)], dst.tm(Fiy, F(f))):
                bad("structure naturality", f"({ob[y]}, {C.label(f)})")
    t = src.t
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = E.seq(dst.rw(mu[(x, y)], F(z)), mu[(t(x, y), z)], F(src.a(x, y, z)))
                rhs = E.seq(dst.a(F(x), F(y), F(z)), dst.lw(F(x), mu[(y, z)]), mu[(x, t(y, z))])
                if lhs != rhs:
                    bad("associativity hexagon", f"({ob[x]}, {ob[y]}, {ob[z]})")
    for x in range(n):
        lhs = E.seq(dst.rw(mf.unit_iso, F(x)), mu[(src.unit, x)], F(src.l(x)))
        if lhs != dst.l(F(x)):
            bad("left unit square", ob[x])
        lhs = E.seq(dst.lw(F(x), mf.unit_iso), mu[(x, src.unit)], F(src.r(x)))
        if lhs != dst.r(F(x)):
            bad("right unit square", ob[x])
    bad.finish()
    return report


def braided_functor_report(mf: MonoidalFunctorData, src: BraidingData, dst: BraidingData
                           ) -> ValidationReport:
    """F(β_{X,Y})∘μ_{X,Y} = μ_{Y,X}∘β_{FX,FY} for all pairs."""
    F = mf.F
    C, E = src.base.cat, dst.base.cat
    report = ValidationReport(subject="braided functor")
    for x in range(C.n):
        for y in range(C.n):
            lhs = E.compose(F(src.b(x, y)), mf.mu(x, y))
            rhs = E.compose(mf.mu(y, x), dst.b(F(x), F(y)))
            if lhs != rhs:
                report.fail(f"braiding not preserved at ({C.objects[x]}, {C.objects[y]})")
    return report


def check_monoidal_transformation(alpha: NatFamily, F: MonoidalFunctorData, G: MonoidalFunctorData,
                                  m: MonoidalData, dst: MonoidalData | None = None
                                  ) -> ValidationReport:
    """α_{X⊗Y}∘μ^F_{X,Y} = μ^G_{X,Y}∘(α_X⊗α_Y) and α_𝟙∘ε^F = ε^G."""
    dst = dst or m
    E = dst.cat
    report = ValidationReport(subject="monoidal transformation")
    n = m.cat.n
    for x in range(n):
        for y in range(n):
            lhs = E.compose(alpha[m.t(x, y)], F.mu(x, y))
            rhs = E.compose(G.mu(x, y), dst.tm(alpha[x], alpha[y]))
            if lhs != rhs:
                report.fail(f"tensor compatibility at ({m.cat.objects[x]}, {m.cat.objects[y]})")
                if len(report.violations) >= MAX_LISTED:
                    return report
    if n and E.compose(alpha[m.unit], F.unit_iso) != G.unit_iso:
        report.fail("unit compatibility")
    return report


def invertible_objects(m: MonoidalData) -> dict[int, int]:
    """Map each invertible object to the lowest-index Y with X⊗Y ≅ 𝟙 ≅ Y⊗X."""
    cat = m.cat
    out = {}
    for x in range(cat.n):
        for y in range(cat.n):
            if cat.isomorphic(m.t(x, y), m.unit) and cat.isomorphic(m.t(y, x), m.unit):
                out[x] = y
                break
    return out


def functor_from_tables(src: FinCategory, dst: FinCategory, obj_map: Sequence[int],
                        mor_map: dict[MorId, MorId], variance: str = "co") -> Functor:
    return Functor(src, dst, tuple(obj_map), dict(mor_map), variance)


def require_valid(report: ValidationReport) -> None:
    if not report.ok:
        raise StructureError(report.subject + ": " + "; ".join((report.structural + report.violations)[:MAX_LISTED]))
