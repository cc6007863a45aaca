"""The r-extension: adjoin a new unit 𝟙 to (ℳ', K') along f: K' → 𝟙'.

Objects are those of ℳ' followed by 𝟙 (always the last index).  With
Φ(𝟙) = 𝟙', Ψ(𝟙) = K', f_𝟙 = f and Φ = Ψ, f_X = id on ℳ', a morphism
X → Y is an element of Hom'(ΦX, ΨY), composed as v∘f_Y∘u; Hom(𝟙, 𝟙)
additionally contains a formal identity, stored last.

Every morphism u: X → Y has a shadow f_Y∘u: ΦX → ΦY in ℳ' (the identity
of 𝟙 has shadow id_𝟙'); whiskering by an object of ℳ' is computed on
shadows, which makes 𝟙 strictly unital.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FinCategory, Functor, MorId, StructureError, TheoremViolation, ValidationReport,
    enumerate_nat_isos, validate_category, validate_functor,
)
from .duality import GVData, canonical_unit_isos, dualizing_from_K, find_dualizing, quasi_inverse
from .hecke import (
    IdempotentArrow, dual_of_unit_morphism, extract_triple, find_idempotent_arrows,
    hecke_subcategory,
)
from .monoidal import MonoidalData, MonoidalFunctorData, validate_monoidal, validate_monoidal_functor

__all__ = [
    "ExtensionData", "CategoryExtension", "abstract_extension", "monoidal_extension",
    "dual_of_unit_morphism", "extension_diagram_commutes", "extended_duality",
    "verify_r_extension", "roundtrip_check", "universal_extension_functor",
    "universal_functor", "permute_monoidal",
]


@dataclass(frozen=True, eq=False)
class CategoryExtension:
    cat: FinCategory
    base: FinCategory
    iota: Functor
    one: int
    delta: MorId
    pi: MorId
    K: int        # K' in the base
    unit: int     # 𝟙' in the base
    f: MorId
    report: ValidationReport

    def phi(self, x: int) -> int:
        return self.unit if x == self.one else x

    def psi(self, x: int) -> int:
        return self.K if x == self.one else x

    def formal_id(self) -> MorId:
        return self.cat.id(self.one)

    def rep(self, u: MorId) -> MorId | None:
        """The ℳ' element Hom'(ΦX, ΨY) behind u; None for the formal identity."""
        if u == self.formal_id():
            return None
        return MorId(self.phi(u.src), self.psi(u.dst), u.index)

    def shadow(self, u: MorId) -> MorId:
        """f_Y∘u: ΦX → ΦY in ℳ'."""
        r = self.rep(u)
        if r is None:
            return self.base.id(self.unit)
        fy = self.f if u.dst == self.one else self.base.id(u.dst)
        return self.base.compose(fy, r)

    def embed(self, x: int, y: int, g: MorId) -> MorId:
        """The morphism x → y of ℳ whose representative is g ∈ Hom'(Φx, Ψy)."""
        if g.src != self.phi(x) or g.dst != self.psi(y):
            raise StructureError("representative has the wrong endpoints")
        return MorId(x, y, g.index)


@dataclass(frozen=True, eq=False)
class ExtensionData:
    M: MonoidalData
    ext: CategoryExtension
    gv: GVData            # the GV structure on ℳ' it was built from

    @property
    def iota(self) -> Functor:
        return self.ext.iota

    @property
    def one(self) -> int:
        return self.ext.one

    @property
    def delta(self) -> MorId:
        return self.ext.delta

    @property
    def pi(self) -> MorId:
        return self.ext.pi


def _fresh_name(names, base: str = "I") -> str:
    name = base
    while name in names:
        name += "'"
    return name


def abstract_extension(base: FinCategory, K: int, unit: int, f: MorId,
                       name: str | None = None) -> CategoryExtension:
    if f.src != K or f.dst != unit:
        raise StructureError("f must be a morphism K' → 1'")
    n = base.n
    one = n
    objects = list(base.objects) + [_fresh_name(base.objects)]
    phi = lambda x: unit if x == one else x
    psi = lambda x: K if x == one else x

    homs = {}
    for x in range(n + 1):
        for y in range(n + 1):
            labels = list(base.homs[(phi(x), psi(y))])
            if x == one and y == one:
                labels = [f"d.{lab}.p" for lab in labels] + ["id"]
            elif x == one:
                labels = [f"{lab}.p" for lab in labels]
            elif y == one:
                labels = [f"d.{lab}" for lab in labels]
            homs[(x, y)] = labels
    formal = MorId(one, one, len(base.homs[(unit, K)]))

    def rep(u: MorId) -> MorId:
        return MorId(phi(u.src), psi(u.dst), u.index)

    def comp(v: MorId, u: MorId) -> MorId:
        if u == formal:
            return v
        if v == formal:
            return u
        y = u.dst
        fy = f if y == one else base.id(y)
        r = base.seq(rep(u), fy, rep(v))
        return MorId(u.src, v.dst, r.index)

    def ident(x: int) -> MorId:
        return formal if x == one else base.id(x)

    cat = FinCategory.build(name or f"{base.name}+r", objects, homs, comp, ident)
    iota = Functor(base, cat, tuple(range(n)), {g: g for g in base.morphisms})
    delta = MorId(K, one, base.id(K).index)
    pi = MorId(one, unit, base.id(unit).index)
    report = ValidationReport(subject=f"abstract extension {cat.name}")
    report.merge(validate_category(cat))
    report.merge(validate_functor(iota, base, cat), "ι: ")
    if cat.compose(pi, delta) != f:
        report.fail("π∘δ ≠ ι(f)")
    # (ii) g ↦ δ∘g and g ↦ g∘π are bijective
    for x in range(n):
        if sorted(cat.compose(delta, g) for g in cat.hom(x, K)) != sorted(cat.hom(x, one)):
            report.fail(f"g ↦ δ∘g is not bijective at {base.objects[x]}")
        if sorted(cat.compose(g, pi) for g in cat.hom(unit, x)) != sorted(cat.hom(one, x)):
            report.fail(f"g ↦ g∘π is not bijective at {base.objects[x]}")
    # (iii) g ↦ δ∘g∘π is injective with image End(𝟙) minus the identity
    img = [cat.seq(pi, g, delta) for g in cat.hom(unit, K)]
    if len(set(img)) != len(img) or sorted(img + [formal]) != sorted(cat.hom(one, one)):
        report.fail("g ↦ δ∘g∘π does not hit End(1) minus id exactly once")
    return CategoryExtension(cat, base, iota, one, delta, pi, K, unit, f, report)


def universal_functor(ext: CategoryExtension, target: FinCategory, iota_bar: Functor,
                      one_bar: int, delta_bar: MorId, pi_bar: MorId) -> Functor:
    """The functor ℳ → target fixed by ι̅, 𝟙 ↦ 𝟙̅, δ ↦ δ̅, π ↦ π̅; uniqueness by scan."""
    cat, base = ext.cat, ext.base
    if target.compose(pi_bar, delta_bar) != iota_bar(ext.f):
        raise StructureError("triangle does not commute")
    obj_map = tuple(list(iota_bar.obj_map) + [one_bar])
    mor = {}
    for u in cat.morphisms:
        r = ext.rep(u)
        if r is None:
            mor[u] = target.id(one_bar)
            continue
        img = iota_bar(r)
        if u.dst == ext.one:
            img = target.compose(delta_bar, img)
        if u.src == ext.one:
            img = target.compose(img, pi_bar)
        mor[u] = img
    F = Functor(cat, target, obj_map, mor)
    validate_functor(F, cat, target).raise_for_theorem()
    # every other assignment agreeing on the generators fails to be a functor
    free = [u for u in cat.morphisms if ext.one in (u.src, u.dst) and u not in (ext.delta, ext.pi)]
    fixed = {g: iota_bar(g) for g in base.morphisms}
    fixed[ext.delta] = delta_bar
    fixed[ext.pi] = pi_bar
    count = _count_extensions(cat, target, obj_map, fixed, free)
    if count != 1:
        raise TheoremViolation(f"{count} functors extend the datum")
    return F


def _count_extensions(cat: FinCategory, target: FinCategory, obj_map, fixed: dict,
                      free: list[MorId]) -> int:
    assign = dict(fixed)
    checks = {u: [] for u in free}
    order = {u: i for i, u in enumerate(free)}

    def rank(m: MorId) -> int:
        return order.get(m, -1)

    for (g, f), r in cat.comp.items():
        last = max(rank(g), rank(f), rank(r))
        if last >= 0:
            checks[free[last]].append((g, f, r))
    found = 0

    def extend(k: int) -> None:
        nonlocal found
        if k == len(free):
            found += 1
            return
        u = free[k]
        for c in target.hom(obj_map[u.src], obj_map[u.dst]):
            if u == cat.id(u.src) and c != target.id(obj_map[u.src]):
                continue
            assign[u] = c
            if all(target.compose(assign[g], assign[f]) == assign[r] for g, f, r in checks[u]):
                extend(k + 1)
            del assign[u]

    extend(0)
    return found


def extension_diagram_commutes(m: MonoidalData, K: int, f: MorId) -> bool:
    """l'_{K'}∘(f⊗id) = r'_{K'}∘(id⊗f) on K'⊗K'."""
    cat = m.cat
    return cat.compose(m.l(K), m.rw(f, K)) == cat.compose(m.r(K), m.lw(K, f))


def monoidal_extension(gv: GVData, f: MorId, dual_check=dual_of_unit_morphism) -> ExtensionData:
    """Extend ⊗ to ℳ with 𝟙 strictly unital; refuses unless Df = f.

    ``dual_check`` computes Df; it is a parameter only so the refusal path
    can be exercised.
    """
    mp, K = gv.m, gv.K
    base, unit = mp.cat, mp.unit
    if dual_check(gv, f) != f:
        raise StructureError("Df ≠ f: the extension hypothesis fails")
    if not extension_diagram_commutes(mp, K, f):
        raise TheoremViolation("Df = f but the K'⊗K' diagram does not commute")
    ext = abstract_extension(base, K, unit, f)
    ext.report.raise_for_theorem()
    cat, one, n = ext.cat, ext.one, base.n

    def t(x: int, y: int) -> int:
        if x == one:
            return y
        if y == one:
            return x
        return mp.t(x, y)

    def left(x: int, v: MorId) -> MorId:
        """id_x ⊗ v for x in ℳ'."""
        s = mp.lw(x, ext.shadow(v))
        if v.src == one:
            s = base.compose(s, mp.rinv(x))
        if v.dst == one:
            s = base.compose(mp.r(x), s)
        return s

    def right(u: MorId, y: int) -> MorId:
        """u ⊗ id_y for y in ℳ'."""
        s = mp.rw(ext.shadow(u), y)
        if u.src == one:
            s = base.compose(s, mp.linv(y))
        if u.dst == one:
            s = base.compose(mp.l(y), s)
        return s

    def L(x: int, v: MorId) -> MorId:
        return v if x == one else left(x, v)

    def R(u: MorId, y: int) -> MorId:
        return u if y == one else right(u, y)

    tobj = {(x, y): t(x, y) for x in range(n + 1) for y in range(n + 1)}
    tmor = {}
    for u in cat.morphisms:
        for v in cat.morphisms:
            tmor[(u, v)] = cat.compose(R(u, v.dst), L(u.src, v))
    assoc = {}
    for x in range(n + 1):
        for y in range(n + 1):
            for z in range(n + 1):
                assoc[(x, y, z)] = cat.id(t(t(x, y), z)) if one in (x, y, z) else mp.a(x, y, z)
    unitors = tuple(cat.id(x) for x in range(n + 1))
    M = MonoidalData(cat, one, tobj, tmor, assoc, unitors, unitors)
    validate_monoidal(M).raise_for_theorem()
    return ExtensionData(M, ext, gv)


def extended_duality(ex: ExtensionData) -> Functor:
    """D on ℳ: D' on ℳ', D𝟙 = 𝟙, D(δ) = dK⁻¹∘π and D(π) = δ∘d1.

    dK: DK' ≅ 𝟙' and d1: D𝟙' ≅ K' are the canonical isomorphisms of ℳ'; on a
    skeletal ℳ' they are what makes "D(δ) = π, D(π) = δ" literally true.
    """
    gv, ext = ex.gv, ex.ext
    base, cat, one = ext.base, ext.cat, ext.one
    D = gv.D
    u = canonical_unit_isos(gv, quasi_inverse(gv))
    obj_map = tuple(list(D.obj_map) + [one])
    mor = {}
    for v in cat.morphisms:
        r = ext.rep(v)
        if r is None:
            mor[v] = cat.id(one)
            continue
        # v = δ^[dst=𝟙] ∘ r ∘ π^[src=𝟙], so D(v) = D(π)^[src=𝟙] ∘ D(r) ∘ D(δ)^[dst=𝟙]
        g = D(r)
        if v.dst == one:
            g = base.compose(g, base.inv(u.dK))
        if v.src == one:
            g = base.compose(u.d1, g)
        mor[v] = MorId(obj_map[v.dst], obj_map[v.src], g.index)
    return Functor(cat, cat, obj_map, mor, "contra")


def verify_r_extension(ex: ExtensionData) -> tuple[GVData, ValidationReport]:
    """𝟙 is dualizing on ℳ (found by search), with duality ≅ the extended D;
    π is an idempotent arrow and 𝟙'ℳ𝟙' is ℳ' on the nose."""
    M, ext = ex.M, ex.ext
    cat, one = M.cat, ext.one
    report = ValidationReport(subject=f"r-extension {cat.name}")
    Dext = extended_duality(ex)
    report.merge(validate_functor(Dext, cat, cat), "extended D: ")
    if one not in [g.K for g in find_dualizing(M)]:
        raise TheoremViolation("the new unit is not dualizing")
    gv = dualizing_from_K(M, one)
    if not enumerate_nat_isos(gv.D, Dext, cat):
        report.fail("searched duality is not isomorphic to the extended D")
    if IdempotentArrow(ext.unit, ext.pi) not in find_idempotent_arrows(M):
        report.fail("π is not an idempotent arrow")
    h = hecke_subcategory(M, IdempotentArrow(ext.unit, ext.pi))
    if list(h.keep) != list(range(ext.base.n)) or not h.m.same_tables(ex.gv.m):
        report.fail("1'ℳ1' does not coincide with ℳ'")
    return gv, report


def roundtrip_check(gv: GVData, f: MorId) -> ValidationReport:
    """Extend along f, extract the triple back, compare with (ℳ', K', f)."""
    ex = monoidal_extension(gv, f)
    Mgv, report = verify_r_extension(ex)
    report.subject = f"round trip through {ex.M.cat.name}"
    tri = extract_triple(Mgv, IdempotentArrow(ex.ext.unit, ex.pi))
    report.merge(tri.report, "extracted: ")
    base = gv.cat
    if not tri.hecke.m.same_tables(gv.m):
        report.fail("extracted monoidal category differs from ℳ'")
        return report
    # κ: K' → K'' corresponds to δ∘r'_{K'} under Hom(K', D𝟙') ≅ Hom(K'⊗𝟙', 𝟙)
    cat, m = ex.M.cat, ex.M
    K2 = tri.hecke.keep[tri.K]
    target = cat.compose(ex.delta, gv.m.r(gv.K))
    kappa = [k for k in cat.hom(gv.K, K2) if Mgv.P(gv.K, ex.ext.unit, k) == target]
    if len(kappa) != 1 or cat.inverse(kappa[0]) is None:
        report.fail("no canonical isomorphism K' ≅ K''")
        return report
    f2 = tri.hecke.lift(tri.f)
    if cat.compose(f2, kappa[0]) != f:
        report.fail("extracted f does not match f under K' ≅ K''")
    report.info["hom_one_one"] = cat.hom_size(ex.one, ex.one)
    report.info["objects"] = cat.n
    return report


def permute_monoidal(m: MonoidalData, perm: list[int], name: str | None = None
                     ) -> tuple[MonoidalData, Functor]:
    """Relabel objects so that old object x becomes perm[x]; returns the copy and the iso."""
    cat = m.cat
    n = cat.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    mv = lambda f: MorId(perm[f.src], perm[f.dst], f.index)
    homs = {(perm[x], perm[y]): cat.homs[(x, y)] for x in range(n) for y in range(n)}
    new_cat = FinCategory.build(
        name or f"{cat.name}~", [cat.objects[inv[i]] for i in range(n)], homs,
        lambda g, f: mv(cat.compose(MorId(inv[g.src], inv[g.dst], g.index),
                                    MorId(inv[f.src], inv[f.dst], f.index))),
        lambda x: mv(cat.id(inv[x])))
    tobj = {(perm[x], perm[y]): perm[m.t(x, y)] for x in range(n) for y in range(n)}
    tmor = {(mv(f), mv(g)): mv(m.tm(f, g)) for f in cat.morphisms for g in cat.morphisms}
    assoc = {(perm[x], perm[y], perm[z]): mv(m.a(x, y, z))
             for x in range(n) for y in range(n) for z in range(n)}
    lunit = tuple(mv(m.l(inv[i])) for i in range(n))
    runit = tuple(mv(m.r(inv[i])) for i in range(n))
    out = MonoidalData(new_cat, perm[m.unit], tobj, tmor, assoc, lunit, runit)
    iso = Functor(cat, new_cat, tuple(perm), {f: mv(f) for f in cat.morphisms})
    return out, iso


def universal_extension_functor(ex: ExtensionData, N: MonoidalData, varpi: MorId,
                                F: MonoidalFunctorData, xi: MorId) -> MonoidalFunctorData:
    """The monoidal functor ℳ → 𝒩 extending F with δ ↦ ξ and π ↦ ϖ.

    F is a monoidal functor ℳ' → e𝒩e given on ambient objects of 𝒩, with
    unit isomorphism e → F(𝟙').  Its structure maps are taken as given; on
    pairs involving 𝟙 the structure is forced by the unit squares, and
    uniqueness of that choice is confirmed by scanning.
    """
    ext, ncat = ex.ext, N.cat
    e = varpi.dst
    eps = F.unit_iso
    pi_bar = ncat.compose(eps, varpi)
    if ncat.compose(pi_bar, xi) != F.F(ext.f):
        raise StructureError("triangle does not commute")
    G = universal_functor(ext, ncat, F.F, N.unit, xi, pi_bar)
    M, cat, one = ex.M, ex.M.cat, ex.one
    mu = {}
    for x in range(cat.n):
        for y in range(cat.n):
            if x != one and y != one:
                mu[(x, y)] = F.mu(x, y)
    # remaining components: unique candidates for the unit squares
    unit_cands = [c for c in ncat.isos(N.unit, G(one)) if ncat.is_identity(c)] or \
        ncat.isos(N.unit, G(one))
    results = []
    for u0 in unit_cands:
        trial = dict(mu)
        ok = True
        for y in range(cat.n):
            gy = G(y)
            want_l = N.l(gy)
            cands = [c for c in ncat.isos(N.t(G(one), gy), G(M.t(one, y)))
                     if ncat.seq(N.rw(u0, gy), c, G(M.l(y))) == want_l]
            if len(cands) != 1:
                ok = False
                break
            trial[(one, y)] = cands[0]
        if not ok:
            continue
        for x in range(cat.n):
            if x == one:
                continue
            gx = G(x)
            cands = [c for c in ncat.isos(N.t(gx, G(one)), G(M.t(x, one)))
                     if ncat.seq(N.lw(gx, u0), c, G(M.r(x))) == N.r(gx)]
            if len(cands) != 1:
                ok = False
                break
            trial[(x, one)] = cands[0]
        if not ok:
            continue
        cand = MonoidalFunctorData(G, trial, u0)
        if validate_monoidal_functor(cand, M, N).ok:
            results.append(cand)
    if len(results) != 1:
        raise TheoremViolation(f"{len(results)} monoidal extensions of the datum")
    return results[0]
