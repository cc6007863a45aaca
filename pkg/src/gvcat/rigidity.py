"""The second tensor product ⊙, the comparison X⊗Y → X⊙Y, and rigid duals.

Rigid duals are found by scanning coevaluation candidates; the injectivity /
surjectivity criterion on the maps Hom(Z, B⊗Y) → Hom(A⊗Z, Y) is computed
separately and the two verdicts must agree.

The ⊙ functions need the GV structure whose dualizing object is literally the
unit object, so that DX⊗X → K is a map to 𝟙.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MorId, StructureError, TheoremViolation, ValidationReport
from .duality import GVData, QuasiInverse, copairing, dualizing_from_K, quasi_inverse
from .monoidal import MonoidalData

__all__ = [
    "RigidWitness", "second_tensor", "canonical_comparison", "check_rigid_pair",
    "criterion_iii2", "rigidity_report", "check_invertible", "denis_check",
    "odot_monoidal", "unit_dualizing",
]


@dataclass(frozen=True)
class RigidWitness:
    A: int
    B: int
    eps: MorId
    coeval: MorId


def unit_dualizing(gv: GVData) -> GVData:
    """The GV structure on the same category with K equal to the unit object."""
    if gv.K == gv.m.unit:
        return gv
    out = dualizing_from_K(gv.m, gv.m.unit)
    if out is None:
        if gv.is_r_category():
            raise TheoremViolation("unit is isomorphic to K but not dualizing")
        raise StructureError("not an r-category: the unit is not dualizing")
    return out


def _need_unit_K(gv: GVData) -> None:
    if gv.K != gv.m.unit:
        raise StructureError("⊙ needs the GV structure with K equal to the unit object")


def second_tensor(gv: GVData, qi: QuasiInverse, x: int, y: int) -> int:
    """X⊙Y = D⁻¹(DY⊗DX)."""
    return qi.Dinv(gv.m.t(gv.D(y), gv.D(x)))


def canonical_comparison(gv: GVData, qi: QuasiInverse, x: int, y: int) -> MorId:
    """X⊗Y → X⊙Y, the copairing of

    (DY⊗DX)⊗(X⊗Y) →a DY⊗(DX⊗(X⊗Y)) →a⁻¹ DY⊗((DX⊗X)⊗Y) →ev DY⊗(𝟙⊗Y) →l DY⊗Y →ev 𝟙.
    """
    _need_unit_K(gv)
    cat, m, D = gv.cat, gv.m, gv.D
    dx, dy = D(x), D(y)
    mu = cat.seq(
        m.a(dy, dx, m.t(x, y)),
        m.lw(dy, m.ainv(dx, x, y)),
        m.lw(dy, m.rw(gv.ev[x], y)),
        m.lw(dy, m.l(y)),
        gv.ev[y],
    )
    fwd, _ = copairing(gv, qi, m.t(dy, dx), m.t(x, y))
    return fwd[mu]


def _zigzag_a(m: MonoidalData, a: int, b: int, eps: MorId, c: MorId) -> MorId:
    """A → A⊗𝟙 → A⊗(B⊗A) → (A⊗B)⊗A → 𝟙⊗A → A."""
    cat = m.cat
    return cat.seq(m.rinv(a), m.lw(a, c), m.ainv(a, b, a), m.rw(eps, a), m.l(a))


def _zigzag_b(m: MonoidalData, a: int, b: int, eps: MorId, c: MorId) -> MorId:
    """B → 𝟙⊗B → (B⊗A)⊗B → B⊗(A⊗B) → B⊗𝟙 → B."""
    cat = m.cat
    return cat.seq(m.linv(b), m.rw(c, b), m.a(b, a, b), m.lw(b, eps), m.r(b))


def _js_map(m: MonoidalData, a: int, b: int, eps: MorId, z: int, y: int) -> dict[MorId, MorId]:
    """Hom(Z, B⊗Y) → Hom(A⊗Z, Y), f ↦ l_Y∘(ε⊗id_Y)∘a⁻¹∘(id_A⊗f)."""
    cat = m.cat
    return {f: cat.seq(m.lw(a, f), m.ainv(a, b, y), m.rw(eps, y), m.l(y))
            for f in cat.hom(z, m.t(b, y))}


def criterion_iii2(m: MonoidalData, a: int, b: int, eps: MorId) -> bool:
    """Injective for (Y, Z) = (𝟙, B) and surjective for (Y, Z) = (A, 𝟙)."""
    cat = m.cat
    one = m.unit
    inj = _js_map(m, a, b, eps, b, one)
    if len(set(inj.values())) != len(inj):
        return False
    sur = _js_map(m, a, b, eps, one, a)
    return set(sur.values()) == set(cat.hom(m.t(a, one), a))


def check_rigid_pair(m: MonoidalData, a: int, b: int, eps: MorId) -> RigidWitness | None:
    """Is (B, ε: A⊗B → 𝟙) a right rigid dual of A?

    Scans c ∈ Hom(𝟙, B⊗A) for the first zigzag; on a hit the second zigzag
    must then also be the identity, and the criterion verdict must agree.
    """
    cat = m.cat
    if (eps.src, eps.dst) != (m.t(a, b), m.unit):
        raise StructureError("eps must be a morphism A⊗B → 𝟙")
    witness = None
    for c in cat.hom(m.unit, m.t(b, a)):
        if cat.is_identity(_zigzag_a(m, a, b, eps, c)):
            if cat.is_identity(_zigzag_b(m, a, b, eps, c)):
                witness = RigidWitness(a, b, eps, c)
            break
    if (witness is not None) != criterion_iii2(m, a, b, eps):
        raise TheoremViolation(
            f"zigzag search and injectivity/surjectivity criterion disagree on "
            f"({cat.objects[a]}, {cat.objects[b]}, {cat.label(eps)})")
    return witness


def right_duals(m: MonoidalData, a: int) -> list[RigidWitness]:
    cat = m.cat
    out = []
    for b in range(cat.n):
        for eps in cat.hom(m.t(a, b), m.unit):
            w = check_rigid_pair(m, a, b, eps)
            if w is not None:
                out.append(w)
    return out


def left_duals(m: MonoidalData, b: int) -> list[RigidWitness]:
    cat = m.cat
    out = []
    for a in range(cat.n):
        for eps in cat.hom(m.t(a, b), m.unit):
            w = check_rigid_pair(m, a, b, eps)
            if w is not None:
                out.append(w)
    return out


def is_rigid_object(m: MonoidalData, x: int) -> bool:
    return bool(right_duals(m, x)) and bool(left_duals(m, x))


def rigidity_report(gv: GVData, qi: QuasiInverse | None = None) -> ValidationReport:
    """Per-object rigidity with the dual-identification and comparison checks.

    ``info`` carries the three category-level verdicts (i) all objects rigid,
    (ii) every comparison X⊗Y → X⊙Y invertible, (iii) every X⊗DX → X⊙DX
    invertible; a disagreement is a theorem violation.
    """
    gv = unit_dualizing(gv)
    qi = qi or quasi_inverse(gv)
    cat, m, D = gv.cat, gv.m, gv.D
    ob = cat.objects
    n = cat.n
    report = ValidationReport(subject=f"rigidity of {cat.name}")
    comp_iso = {(x, y): cat.inverse(canonical_comparison(gv, qi, x, y)) is not None
                for x in range(n) for y in range(n)}
    per_object = {}
    for x in range(n):
        rd, ld = right_duals(m, x), left_duals(m, x)
        rigid = bool(rd) and bool(ld)
        entry = {"rigid": rigid, "right_dual": ob[rd[0].B] if rd else None,
                 "left_dual": ob[ld[0].A] if ld else None}
        per_object[ob[x]] = entry
        # a single rigid side already forces the dual identification
        for w in rd:
            if not cat.isomorphic(w.B, qi.Dinv(x)):
                report.fail(f"right dual of {ob[x]} is not D⁻¹{ob[x]}")
        for w in ld:
            if not cat.isomorphic(w.A, D(x)):
                report.fail(f"left dual of {ob[x]} is not D{ob[x]}")
        by_comparison = comp_iso[(x, D(x))] and comp_iso[(qi.Dinv(x), x)]
        if rigid != by_comparison:
            report.fail(f"rigidity of {ob[x]} disagrees with X⊗DX, D⁻¹X⊗X comparisons")
        if rigid and not all(comp_iso[(x, y)] and comp_iso[(y, x)] for y in range(n)):
            report.fail(f"{ob[x]} is rigid but some comparison with it is not invertible")
    # a pair (A, B, ε) is a rigid pair iff ε induces B ≅ D⁻¹A and B⊗A → B⊙A is invertible
    pairs_checked = 0
    for a in range(n):
        for b in range(n):
            fwd, _ = copairing(gv, qi, a, b)
            for eps in cat.hom(m.t(a, b), m.unit):
                pairs_checked += 1
                w = check_rigid_pair(m, a, b, eps)
                cond_a = cat.inverse(fwd[eps]) is not None
                cond_b = comp_iso[(b, a)]
                if (w is not None) != (cond_a and cond_b):
                    report.fail(f"rigid-pair verdict disagrees with (a)∧(b) on "
                                f"({ob[a]}, {ob[b]}, {cat.label(eps)})")
                if w is not None and not all(comp_iso[(b, y)] and comp_iso[(y, a)] for y in range(n)):
                    report.fail(f"rigid pair ({ob[a]}, {ob[b]}) has a non-invertible comparison")
    all_rigid = all(e["rigid"] for e in per_object.values())
    all_pairs = all(comp_iso.values())
    dual_pairs = all(comp_iso[(x, D(x))] for x in range(n))
    if not (all_rigid == all_pairs == dual_pairs):
        report.fail(f"category-level verdicts disagree: (i)={all_rigid} (ii)={all_pairs} (iii)={dual_pairs}")
    report.info.update({
        "objects": per_object,
        "comparison_iso": {f"{ob[x]},{ob[y]}": v for (x, y), v in comp_iso.items()},
        "rigid": all_rigid,
        "all_comparisons_iso": all_pairs,
        "dual_comparisons_iso": dual_pairs,
        "pairs_checked": pairs_checked,
    })
    return report


def check_invertible(m: MonoidalData, x: int) -> tuple[int, MorId, MorId] | None:
    """Lowest Y with isomorphisms X⊗Y → 𝟙 and Y⊗X → 𝟙, or None."""
    cat = m.cat
    for y in range(cat.n):
        i1, i2 = cat.isos(m.t(x, y), m.unit), cat.isos(m.t(y, x), m.unit)
        if i1 and i2:
            return y, i1[0], i2[0]
    return None


def denis_check(gv: GVData) -> ValidationReport:
    """K is invertible iff K is rigid, both sides computed independently."""
    from .duality import homkk_check
    cat, m = gv.cat, gv.m
    report = ValidationReport(subject=f"invertible vs rigid for K = {cat.objects[gv.K]}")
    inv = check_invertible(m, gv.K) is not None
    rigid = is_rigid_object(m, gv.K)
    report.info.update({"invertible": inv, "rigid": rigid})
    if inv != rigid:
        report.fail(f"K invertible={inv} but rigid={rigid}")
    report.merge(homkk_check(gv, quasi_inverse(gv)))
    return report


def odot_monoidal(gv: GVData, qi: QuasiInverse | None = None) -> tuple[MonoidalData, ValidationReport]:
    """⊙ as a full monoidal structure, plus its compatibility with the comparison.

    f⊙g = D⁻¹(Dg⊗Df).  The associator (X1⊙X2)⊙X3 → X1⊙(X2⊙X3) is D⁻¹ of
    (η⁻¹⊗id)∘... i.e. D⁻¹((id⊗η)∘a∘(η⁻¹⊗id)); the unitors are
    l^⊙_Y = ε_Y⁻¹∘D⁻¹((id⊗d1⁻¹)∘r⁻¹) and r^⊙_X = ε_X⁻¹∘D⁻¹((d1⁻¹⊗id)∘l⁻¹),
    where d1: D𝟙 → 𝟙 is the canonical isomorphism.
    """
    from .duality import canonical_unit_isos
    gv = unit_dualizing(gv)
    qi = qi or quasi_inverse(gv)
    cat, m, D, Dinv = gv.cat, gv.m, gv.D, qi.Dinv
    n = cat.n
    eta, eps = qi.unit, qi.counit
    d1 = canonical_unit_isos(gv, qi).d1
    tobj = {(x, y): second_tensor(gv, qi, x, y) for x in range(n) for y in range(n)}
    tmor = {(f, g): Dinv(m.tm(D(g), D(f))) for f in cat.morphisms for g in cat.morphisms}
    assoc = {}
    for x1 in range(n):
        for x2 in range(n):
            for x3 in range(n):
                d1_, d2_, d3_ = D(x1), D(x2), D(x3)
                k = cat.seq(m.rw(cat.inv(eta[m.t(d3_, d2_)]), d1_),
                            m.a(d3_, d2_, d1_),
                            m.lw(d3_, eta[m.t(d2_, d1_)]))
                assoc[(x1, x2, x3)] = Dinv(k)
    one = m.unit
    lunit = tuple(cat.compose(cat.inv(eps[y]), Dinv(cat.compose(m.lw(D(y), cat.inv(d1)), m.rinv(D(y)))))
                  for y in range(n))
    runit = tuple(cat.compose(cat.inv(eps[x]), Dinv(cat.compose(m.rw(cat.inv(d1), D(x)), m.linv(D(x)))))
                  for x in range(n))
    odot = MonoidalData(cat, one, tobj, tmor, assoc, lunit, runit)
    from .monoidal import validate_monoidal
    report = validate_monoidal(odot, check_category=False)
    report.subject = f"⊙ on {cat.name}"
    comp = {(x, y): canonical_comparison(gv, qi, x, y) for x in range(n) for y in range(n)}
    for f in cat.morphisms:
        for g in cat.morphisms:
            if cat.compose(comp[(f.dst, g.dst)], m.tm(f, g)) != cat.compose(tmor[(f, g)], comp[(f.src, g.src)]):
                report.fail(f"comparison not natural at ({cat.label(f)}, {cat.label(g)})")
    for x1 in range(n):
        for x2 in range(n):
            for x3 in range(n):
                f = cat.compose(comp[(tobj[(x1, x2)], x3)], m.rw(comp[(x1, x2)], x3))
                g = cat.compose(comp[(x1, tobj[(x2, x3)])], m.lw(x1, comp[(x2, x3)]))
                if cat.compose(assoc[(x1, x2, x3)], f) != cat.compose(g, m.a(x1, x2, x3)):
                    report.fail(f"comparison not compatible with associators at {(x1, x2, x3)}")
    for x in range(n):
        if cat.compose(lunit[x], comp[(one, x)]) != m.l(x):
            report.fail(f"comparison not compatible with left unitors at {cat.objects[x]}")
        if cat.compose(runit[x], comp[(x, one)]) != m.r(x):
            report.fail(f"comparison not compatible with right unitors at {cat.objects[x]}")
    return odot, report
