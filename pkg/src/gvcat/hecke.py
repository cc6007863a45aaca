"""Idempotent arrows π: 𝟙 → e, Hecke subcategories eℳe and the triple (ℳ', K', f)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Functor, MorId, StructureError, TheoremViolation, ValidationReport, enumerate_nat_isos,
    full_subcategory,
)
from .duality import (
    GVData, canonical_unit_isos, dualizing_from_K, find_dualizing, quasi_inverse,
)
from .monoidal import MonoidalData, validate_monoidal

__all__ = [
    "IdempotentArrow", "HeckeData", "Triple", "is_idempotent_arrow", "find_idempotent_arrows",
    "hecke_subcategory", "hecke_gv", "extract_triple", "dual_of_unit_morphism",
]


@dataclass(frozen=True)
class IdempotentArrow:
    e: int
    pi: MorId


@dataclass(frozen=True, eq=False)
class HeckeData:
    """eℳe as monoidal data, with ``keep[i]`` the ambient index of object i."""

    m: MonoidalData
    keep: tuple[int, ...]
    ambient: MonoidalData
    arrow: IdempotentArrow

    def local(self, x: int) -> int:
        return self.keep.index(x)

    def lift(self, f: MorId) -> MorId:
        return MorId(self.keep[f.src], self.keep[f.dst], f.index)

    def lower(self, f: MorId) -> MorId:
        return MorId(self.local(f.src), self.local(f.dst), f.index)


@dataclass(frozen=True, eq=False)
class Triple:
    """What extract_triple returns: (ℳ', K', f) plus the data it came from."""

    hecke: HeckeData
    gv: GVData
    K: int
    f: MorId
    report: ValidationReport


def _arrow_isos(m: MonoidalData, e: int, pi: MorId) -> tuple[MorId, MorId]:
    """(π⊗id_e)∘l_e⁻¹ and (id_e⊗π)∘r_e⁻¹, both e → e⊗e."""
    cat = m.cat
    return (cat.compose(m.rw(pi, e), m.linv(e)), cat.compose(m.lw(e, pi), m.rinv(e)))


def is_idempotent_arrow(m: MonoidalData, pi: MorId) -> bool:
    cat, e = m.cat, pi.dst
    if pi.src != m.unit:
        return False
    return cat.inverse(m.rw(pi, e)) is not None and cat.inverse(m.lw(e, pi)) is not None


def find_idempotent_arrows(m: MonoidalData) -> list[IdempotentArrow]:
    """Exhaustive scan over (e, π), checking that the two maps e → e⊗e agree
    and that arrows into the same e differ by a unique automorphism."""
    cat = m.cat
    out = []
    for e in range(cat.n):
        for pi in cat.hom(m.unit, e):
            if is_idempotent_arrow(m, pi):
                left, right = _arrow_isos(m, e, pi)
                if left != right:
                    raise TheoremViolation(f"π⊗id and id⊗π differ for {cat.label(pi)}")
                out.append(IdempotentArrow(e, pi))
    for a in out:
        for b in out:
            if a.e != b.e:
                continue
            hits = [g for g in cat.isos(a.e, a.e) if cat.compose(g, b.pi) == a.pi]
            if len(hits) != 1:
                raise TheoremViolation(
                    f"{len(hits)} automorphisms carry {cat.label(b.pi)} to {cat.label(a.pi)}")
    return out


def hecke_subcategory(m: MonoidalData, ia: IdempotentArrow) -> HeckeData:
    """Full subcategory on objects ≅ (e⊗Y)⊗e, unit e, unitors inverted from π⊗id and id⊗π."""
    cat = m.cat
    e, pi = ia.e, ia.pi
    if not is_idempotent_arrow(m, pi) or pi.dst != e:
        raise StructureError("not an idempotent arrow")
    objs = cat.iso_closure(m.t(m.t(e, y), e) for y in range(cat.n))
    sub, keep = full_subcategory(cat, sorted(objs), f"{cat.name}|hecke{cat.objects[e]}")
    pos = {old: new for new, old in enumerate(keep)}

    def low(f: MorId) -> MorId:
        return MorId(pos[f.src], pos[f.dst], f.index)

    tobj = {}
    for x in range(sub.n):
        for y in range(sub.n):
            t = m.t(keep[x], keep[y])
            if t not in pos:
                raise TheoremViolation("eℳe is not closed under ⊗")
            tobj[(x, y)] = pos[t]
    tmor = {}
    for f in sub.morphisms:
        for g in sub.morphisms:
            F = MorId(keep[f.src], keep[f.dst], f.index)
            G = MorId(keep[g.src], keep[g.dst], g.index)
            tmor[(f, g)] = low(m.tm(F, G))
    assoc = {(x, y, z): low(m.a(keep[x], keep[y], keep[z]))
             for x in range(sub.n) for y in range(sub.n) for z in range(sub.n)}
    lunit, runit = [], []
    for x in range(sub.n):
        X = keep[x]
        lu = cat.inverse(cat.compose(m.rw(pi, X), m.linv(X)))
        ru = cat.inverse(cat.compose(m.lw(X, pi), m.rinv(X)))
        if lu is None or ru is None:
            raise TheoremViolation(f"π does not act invertibly on {cat.objects[X]}")
        lunit.append(low(lu))
        runit.append(low(ru))
    hm = MonoidalData(sub, pos[e], tobj, tmor, assoc, tuple(lunit), tuple(runit))
    return HeckeData(hm, tuple(keep), m, ia)


def hecke_gv(gv: GVData, ia: IdempotentArrow) -> tuple[HeckeData, GVData, ValidationReport]:
    """GV structure on eℳe with K' = De, derived afresh inside the subcategory."""
    cat, D = gv.cat, gv.D
    e = ia.e
    if not cat.isomorphic(D(D(e)), e):
        raise StructureError("D²e is not isomorphic to e")
    h = hecke_subcategory(gv.m, ia)
    report = ValidationReport(subject=f"GV structure on {h.m.cat.name}")
    report.merge(validate_monoidal(h.m), "monoidal: ")
    de = D(e)
    if de not in h.keep:
        raise TheoremViolation("De is not in eℳe")
    if any(D(x) not in h.keep for x in h.keep):
        raise TheoremViolation("D does not preserve eℳe")
    sub_gv = dualizing_from_K(h.m, h.local(de))
    if sub_gv is None:
        raise TheoremViolation("De is not dualizing in eℳe")
    if h.local(de) not in [g.K for g in find_dualizing(h.m)]:
        raise TheoremViolation("independent search misses De")
    # D restricted to eℳe, as a contravariant functor on the subcategory
    sub = h.m.cat
    restricted = Functor(sub, sub, tuple(h.local(D(x)) for x in h.keep),
                         {f: h.lower(D(h.lift(f))) for f in sub.morphisms}, "contra")
    if not enumerate_nat_isos(sub_gv.D, restricted, sub):
        report.fail("duality of eℳe is not isomorphic to the restriction of D")
    return h, sub_gv, report


def dual_of_unit_morphism(gv: GVData, f: MorId) -> MorId:
    """Df: D𝟙 → DK read as a morphism K → 𝟙 via D𝟙 ≅ K and DK ≅ 𝟙."""
    cat, m = gv.cat, gv.m
    if f.src != gv.K or f.dst != m.unit:
        raise StructureError("expected a morphism K → 1")
    u = canonical_unit_isos(gv, quasi_inverse(gv))
    return cat.seq(cat.inv(u.d1), gv.D(f), u.dK)


def extract_triple(gv: GVData, ia: IdempotentArrow) -> Triple:
    """(eℳe, De, π∘D(π)) from an r-category with K = 𝟙, with its properties checked."""
    cat, m, D = gv.cat, gv.m, gv.D
    if gv.K != m.unit:
        raise StructureError("extract_triple needs the GV structure with K equal to the unit")
    e, pi = ia.e, ia.pi
    qi = quasi_inverse(gv)
    u = canonical_unit_isos(gv, qi)
    report = ValidationReport(subject="triple from a closed idempotent")
    # D²(π) as an arrow 𝟙 → D²e
    d2pi = cat.compose(D(D(pi)), u.dd1)
    if not is_idempotent_arrow(m, d2pi):
        raise TheoremViolation("D²(π) is not an idempotent arrow")
    if cat.isomorphic(D(D(e)), e):
        phis = [p for p in cat.isos(D(D(e)), e) if cat.compose(p, d2pi) == pi]
        if len(phis) != 1:
            raise TheoremViolation("no unique φ: D²e → e with φ∘D²(π) = π")
    h, sub_gv, rep = hecke_gv(gv, ia)
    report.merge(rep)
    Dpi = cat.compose(u.d1, D(pi))          # De → D𝟙 → 𝟙
    f_amb = cat.compose(pi, Dpi)
    f = h.lower(f_amb)
    # (a) Df = f, computed with the duality of eℳe itself
    if dual_of_unit_morphism(sub_gv, f) != f:
        report.fail("Df ≠ f for the extracted f")
    for x in h.keep:
        # (b) g ↦ g∘π : Hom(e, X) → Hom(𝟙, X)
        img = sorted(cat.compose(g, pi) for g in cat.hom(e, x))
        if img != sorted(cat.hom(m.unit, x)):
            report.fail(f"g ↦ g∘π is not bijective at {cat.objects[x]}")
        # (c) h ↦ Dπ∘h : Hom(X, K') → Hom(X, 𝟙)
        img = sorted(cat.compose(Dpi, k) for k in cat.hom(x, D(e)))
        if img != sorted(cat.hom(x, m.unit)):
            report.fail(f"h ↦ Dπ∘h is not bijective at {cat.objects[x]}")
    return Triple(h, sub_gv, h.local(D(e)), f, report)
