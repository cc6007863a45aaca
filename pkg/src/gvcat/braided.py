"""Braided GV categories: Joyal–Street J, twists, ϑ±, φ±, γ = ϑ⁺ϑ⁻ and C = (ϑ⁺)⁻¹ϑ⁻.

J is the identity functor with lax structure β_{Y,X}∘β_{X,Y}, so a monoidal
isomorphism Id → J is exactly an automorphism θ of Id with
θ_{X⊗Y} = β_{Y,X}β_{X,Y}(θ_X⊗θ_Y).

D⁻¹D is only isomorphic to Id here, so every formula that the strict
picture writes with D⁻¹(…_{DX}) is transported back to X along the counit ε.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    MorId, NatFamily, StructureError, TheoremViolation, ValidationReport,
    check_naturality, compose_functors, identity_functor,
)
from .duality import (
    GVData, QuasiInverse, d_squared_monoidal, g_iso, pairing, quasi_inverse, yoneda_solve,
)
from .monoidal import (
    BraidingData, MonoidalData, MonoidalFunctorData, braided_functor_report,
    check_monoidal_transformation, identity_monoidal_functor, opposite_braiding,
    validate_monoidal_functor,
)

__all__ = [
    "TwistData", "joyal_street", "joyal_street_inverse", "enumerate_twists",
    "enumerate_double_twists", "enumerate_monoidal_automorphisms", "is_twist",
    "compute_vartheta", "compute_phi", "canonical_gamma", "canonical_double_twist",
    "d_squared_braided_check", "braided_report", "d_power_monoidal",
    "phi_report", "vartheta_report", "joyal_street_report", "phi_inverse_by_formula",
    "phi_dual",
]


@dataclass(frozen=True)
class TwistData:
    """Automorphism of Id with θ_{X⊗Y} = (β_{Y,X}β_{X,Y})^power ∘ (θ_X⊗θ_Y).

    power 1 is a twist, power 2 a double-twist, power 0 a monoidal
    automorphism of Id.
    """

    components: tuple[MorId, ...]
    power: int = 1

    def __getitem__(self, x: int) -> MorId:
        return self.components[x]

    @property
    def double(self) -> bool:
        return self.power == 2


def _double_power(b: BraidingData, x: int, y: int, power: int) -> MorId:
    cat = b.base.cat
    out = cat.id(b.base.t(x, y))
    bb = b.double(x, y)
    for _ in range(power):
        out = cat.compose(bb, out)
    return out


def is_twist(b: BraidingData, comps, power: int = 1) -> bool:
    m, cat = b.base, b.base.cat
    n = cat.n
    for x in range(n):
        for y in range(n):
            want = cat.compose(_double_power(b, x, y, power), m.tm(comps[x], comps[y]))
            if comps[m.t(x, y)] != want:
                return False
    for f in cat.morphisms:
        if cat.compose(comps[f.dst], f) != cat.compose(f, comps[f.src]):
            return False
    return True


def joyal_street(b: BraidingData) -> MonoidalFunctorData:
    m, cat = b.base, b.base.cat
    mu = {(x, y): b.double(x, y) for x in range(cat.n) for y in range(cat.n)}
    return MonoidalFunctorData(identity_functor(cat), mu, cat.id(m.unit))


def joyal_street_inverse(b: BraidingData) -> MonoidalFunctorData:
    """J⁻¹: the identity functor with structure (β_{Y,X}β_{X,Y})⁻¹."""
    m, cat = b.base, b.base.cat
    mu = {(x, y): cat.inv(b.double(x, y)) for x in range(cat.n) for y in range(cat.n)}
    return MonoidalFunctorData(identity_functor(cat), mu, cat.id(m.unit))


def joyal_street_report(b: BraidingData) -> ValidationReport:
    m = b.base
    J = joyal_street(b)
    report = validate_monoidal_functor(J, m, m)
    report.subject = "Joyal–Street functor"
    report.merge(braided_functor_report(J, b, b), "braided: ")
    Jinv = joyal_street_inverse(b)
    Jop = joyal_street(opposite_braiding(b))
    if Jinv.structure != Jop.structure:
        report.fail("J⁻¹ differs from J of the opposite braiding")
    return report


def _enumerate_power(m: MonoidalData, b: BraidingData | None, power: int) -> list[TwistData]:
    """Backtracking over Aut(X) in object order, pruning on naturality and the twist law."""
    cat = m.cat
    n = cat.n
    cands = [cat.isos(x, x) for x in range(n)]
    nat_checks: list[list[MorId]] = [[] for _ in range(n)]
    for f in cat.morphisms:
        nat_checks[max(f.src, f.dst)].append(f)
    law_checks: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            law_checks[max(x, y, m.t(x, y))].append((x, y))
    factor = {(x, y): _double_power(b, x, y, power) if power else cat.id(m.t(x, y))
              for x in range(n) for y in range(n)}
    out: list[TwistData] = []
    comps: list[MorId] = []

    def ok(k: int) -> bool:
        for f in nat_checks[k]:
            if cat.compose(comps[f.dst], f) != cat.compose(f, comps[f.src]):
                return False
        for x, y in law_checks[k]:
            if comps[m.t(x, y)] != cat.compose(factor[(x, y)], m.tm(comps[x], comps[y])):
                return False
        return True

    def extend(k: int) -> None:
        if k == n:
            out.append(TwistData(tuple(comps), power))
            return
        for c in cands[k]:
            comps.append(c)
            if ok(k):
                extend(k + 1)
            comps.pop()

    extend(0)
    for th in out:
        if n and not cat.is_identity(th[m.unit]):
            raise TheoremViolation("a twist is not the identity on the unit")
    return out


def enumerate_twists(b: BraidingData) -> list[TwistData]:
    return _enumerate_power(b.base, b, 1)


def enumerate_double_twists(b: BraidingData) -> list[TwistData]:
    return _enumerate_power(b.base, b, 2)


def enumerate_monoidal_automorphisms(m: MonoidalData) -> list[TwistData]:
    """Aut^⊗(Id): the power-0 case, which needs no braiding."""
    return _enumerate_power(m, None, 0)


def _transport_dinv(gv: GVData, qi: QuasiInverse, x: int, k: MorId) -> MorId:
    """For an automorphism k of DX, the automorphism ε_X⁻¹∘D⁻¹(k)∘ε_X of X."""
    cat = gv.cat
    e = qi.counit[x]
    return cat.seq(e, qi.Dinv(k), cat.inv(e))


def compute_vartheta(gv: GVData, qi: QuasiInverse, b: BraidingData, sign: int) -> NatFamily:
    """ϑ^±_Y: Y → D²Y inducing ψ ↦ g⁻¹_{X,Y}(ψ)∘β^±_{Y,X} on Hom(D²Y⊗X, K)."""
    key = ("vartheta", sign, id(b))
    if key in gv._cache:
        return gv._cache[key]
    cat, D2 = gv.cat, gv.D2()
    comps = []
    for y in range(cat.n):
        def fam(x: int, psi: MorId, y=y) -> MorId:
            _, ginv = g_iso(gv, x, y)
            return cat.compose(ginv[psi], b.signed(sign, y, x))
        comps.append(yoneda_solve(gv, D2(y), y, fam))
    out = NatFamily(identity_functor(cat), D2, tuple(comps))
    gv._cache[key] = out
    return out


def compute_phi(gv: GVData, qi: QuasiInverse, b: BraidingData, sign: int) -> NatFamily:
    """φ^±_X = γ^±_{X,D⁻¹X}(η_X): D⁻¹X → DX.

    γ^±_{X,Y}: Hom(X, DY) → Hom(Y, DX) is h ↦ P⁻¹(P(h)∘β^±_{Y,X}).
    """
    cat, D, Dinv = gv.cat, gv.D, qi.Dinv
    comps = []
    for x in range(cat.n):
        y = Dinv(x)
        comps.append(_gamma_family(gv, b, sign, x, y)[qi.unit[x]])
    return NatFamily(compose_functors(qi.Dinv, identity_functor(cat)), D, tuple(comps))


def _gamma_family(gv: GVData, b: BraidingData, sign: int, x: int, y: int) -> dict[MorId, MorId]:
    """γ^±_{X,Y} as a table Hom(X, DY) → Hom(Y, DX)."""
    cat = gv.cat
    fwd, _ = pairing(gv, x, y)
    _, pinv = pairing(gv, y, x)
    return {h: pinv[cat.compose(phi, b.signed(sign, y, x))] for h, phi in fwd.items()}


def phi_inverse_by_formula(gv: GVData, qi: QuasiInverse, b: BraidingData, sign: int) -> list[MorId]:
    """(φ_X)⁻¹ recomputed independently: the k: DX → D⁻¹X with D(k) = γ⁻¹_{X,DX}(id_{DX})∘η_X⁻¹."""
    cat, D = gv.cat, gv.D
    out = []
    for x in range(cat.n):
        dx = D(x)
        table = _gamma_family(gv, b, sign, x, dx)
        pre = [h for h, v in table.items() if v == cat.id(dx)]
        if len(pre) != 1:
            raise TheoremViolation("γ is not a bijection")
        want = cat.compose(pre[0], cat.inv(qi.unit[x]))
        hits = [k for k in cat.hom(dx, qi.Dinv(x)) if D(k) == want]
        if len(hits) != 1:
            raise TheoremViolation("D is not fully faithful")
        out.append(hits[0])
    return out


def phi_dual(gv: GVData, qi: QuasiInverse, phi: NatFamily) -> list[MorId]:
    """(φ^∨)_X = D(η_X)∘D(φ⁻¹_{D⁻¹X})∘η_{D⁻¹X}: D⁻¹X → DX."""
    cat, D, Dinv = gv.cat, gv.D, qi.Dinv
    out = []
    for x in range(cat.n):
        y = Dinv(x)
        out.append(cat.seq(qi.unit[y], D(cat.inv(phi[y])), D(qi.unit[x])))
    return out


def phi_report(gv: GVData, qi: QuasiInverse, b: BraidingData) -> ValidationReport:
    cat, D = gv.cat, gv.D
    report = ValidationReport(subject="φ± checks")
    phis = {s: compute_phi(gv, qi, b, s) for s in (1, -1)}
    for s in (1, -1):
        phi, other = phis[s], phis[-s]
        th = compute_vartheta(gv, qi, b, s)
        for y in range(cat.n):
            if th[y] != cat.compose(phi[D(y)], qi.counit[y]):
                report.fail(f"ϑ{'+' if s > 0 else '-'} ≠ φ∘ε at {cat.objects[y]}")
        for x in range(cat.n):
            lhs = cat.compose(cat.inv(qi.unit[x]), D(phi[x]))
            rhs = cat.compose(cat.inv(qi.counit[x]), cat.inv(other[D(x)]))
            if lhs != rhs:
                report.fail(f"D(φ{'+' if s > 0 else '-'}) ≠ (φ∓_D)⁻¹ at {cat.objects[x]}")
        inv = phi_inverse_by_formula(gv, qi, b, s)
        if any(inv[x] != cat.inv(phi[x]) for x in range(cat.n)):
            report.fail("inverse formula for φ disagrees")
        if phi_dual(gv, qi, phi) != list(other.components):
            report.fail("φ^∨ differs from φ of the opposite braiding")
        # γ∘γ = id for all pairs iff φ^∨ = φ
        involutive = all(
            _gamma_family(gv, b, s, y, x)[_gamma_family(gv, b, s, x, y)[h]] == h
            for x in range(cat.n) for y in range(cat.n) for h in cat.hom(x, D(y)))
        fixed = phi_dual(gv, qi, phi) == list(phi.components)
        report.info[f"involutive{'+' if s > 0 else '-'}"] = involutive
        if involutive != fixed:
            report.fail("γγ = id and φ^∨ = φ verdicts disagree")
    return report


def d_power_monoidal(gv: GVData, k: int) -> MonoidalFunctorData:
    """D^{2k} with the iterated structure of D²."""
    m, cat = gv.m, gv.cat
    base = d_squared_monoidal(gv)
    mf = identity_monoidal_functor(m)
    for _ in range(k):
        F = mf.F
        mu = {(x, y): cat.compose(base.F(mf.mu(x, y)), base.mu(F(x), F(y)))
              for x in range(cat.n) for y in range(cat.n)}
        mf = MonoidalFunctorData(compose_functors(base.F, F), mu,
                                 cat.compose(base.F(mf.unit_iso), base.unit_iso))
    return mf


def vartheta_report(gv: GVData, qi: QuasiInverse, b: BraidingData) -> ValidationReport:
    cat, m, D = gv.cat, gv.m, gv.D
    report = ValidationReport(subject="ϑ± checks")
    d2 = d_squared_monoidal(gv, qi)
    Js = {1: joyal_street(b), -1: joyal_street_inverse(b)}
    for s in (1, -1):
        th = compute_vartheta(gv, qi, b, s)
        name = "ϑ+" if s > 0 else "ϑ-"
        report.merge(check_naturality(th, cat), f"{name}: ")
        if any(cat.inverse(c) is None for c in th.components):
            report.fail(f"{name} has a non-invertible component")
        report.merge(check_monoidal_transformation(th, Js[s], d2, m), f"{name} monoidal J^±1 → D²: ")
        other = compute_vartheta(gv, qi, b, -s)
        for x in range(cat.n):
            if th[D(x)] != cat.inv(D(other[x])):
                report.fail(f"{name}_D ≠ D(ϑ∓)⁻¹ at {cat.objects[x]}")
    return report


def canonical_gamma(gv: GVData, qi: QuasiInverse, b: BraidingData) -> tuple[NatFamily, ValidationReport]:
    """γ_X = ϑ⁺_{D²X}∘ϑ⁻_X, checked against the other three expressions."""
    cat, m, D = gv.cat, gv.m, gv.D
    D2 = gv.D2()
    tp, tm_ = compute_vartheta(gv, qi, b, 1), compute_vartheta(gv, qi, b, -1)
    report = ValidationReport(subject="γ checks")
    comps = []
    for x in range(cat.n):
        e1 = cat.compose(tp[D2(x)], tm_[x])
        e2 = cat.compose(D2(tp[x]), tm_[x])
        e3 = cat.compose(tm_[D2(x)], tp[x])
        e4 = cat.compose(D2(tm_[x]), tp[x])
        if not (e1 == e2 == e3 == e4):
            report.fail(f"the four expressions for γ disagree at {cat.objects[x]}")
        comps.append(e1)
    d4 = d_power_monoidal(gv, 2)
    gamma = NatFamily(identity_functor(cat), d4.F, tuple(comps))
    report.merge(check_naturality(gamma, cat), "naturality: ")
    report.merge(check_monoidal_transformation(gamma, identity_monoidal_functor(m), d4, m), "monoidal: ")
    for x in range(cat.n):
        if gamma[D(x)] != cat.inv(D(gamma[x])):
            report.fail(f"γ_D ≠ D(γ)⁻¹ at {cat.objects[x]}")
    return gamma, report


def canonical_double_twist(gv: GVData, qi: QuasiInverse, b: BraidingData
                           ) -> tuple[TwistData, ValidationReport]:
    """C_X = (ϑ⁺_X)⁻¹∘ϑ⁻_X."""
    cat, m, D = gv.cat, gv.m, gv.D
    tp, tm_ = compute_vartheta(gv, qi, b, 1), compute_vartheta(gv, qi, b, -1)
    C = TwistData(tuple(cat.compose(cat.inv(tp[x]), tm_[x]) for x in range(cat.n)), 2)
    report = ValidationReport(subject="canonical double-twist")
    if not is_twist(b, C.components, 2):
        report.fail("C is not a double-twist")
    if not cat.is_identity(C[m.unit]):
        report.fail("C_1 ≠ id")
    if not cat.is_identity(C[gv.K]):
        report.fail("C_K ≠ id")
    for x in range(cat.n):
        if C[D(x)] != D(C[x]):
            report.fail(f"C_D ≠ D(C) at {cat.objects[x]}")
    report.info["trivial"] = all(cat.is_identity(c) for c in C.components)
    report.info["vartheta_equal"] = tp.components == tm_.components
    if report.info["trivial"] != report.info["vartheta_equal"]:
        report.fail("C trivial but ϑ+ ≠ ϑ- (or conversely)")
    return C, report


def d_squared_braided_check(gv: GVData, b: BraidingData) -> ValidationReport:
    """D²(β_{X,Y})∘μ_{X,Y} = μ_{Y,X}∘β_{D²X,D²Y}."""
    report = braided_functor_report(d_squared_monoidal(gv), b, b)
    report.subject = "D² is braided"
    return report


def braided_report(gv: GVData, b: BraidingData) -> ValidationReport:
    """Everything in this module, merged."""
    if b.base is not gv.m:
        raise StructureError("braiding and GV structure live on different monoidal data")
    qi = quasi_inverse(gv)
    report = ValidationReport(subject=f"braided GV checks on {gv.cat.name}")
    report.merge(joyal_street_report(b), "J: ")
    report.merge(vartheta_report(gv, qi, b))
    report.merge(phi_report(gv, qi, b))
    _, rg = canonical_gamma(gv, qi, b)
    report.merge(rg)
    _, rc = canonical_double_twist(gv, qi, b)
    report.merge(rc)
    report.merge(d_squared_braided_check(gv, b))
    return report
