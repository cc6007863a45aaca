"""Pivotal structures (as ψ and as f: Id → D²), twists ↔ pivotal, the involution θ ↦ θ', ribbons.

ψ_{X,Y}: Hom(X⊗Y, K) → Hom(Y⊗X, K) corresponds to f by
ψ_{X,Y}(φ) = g_{X,Y}(φ)∘(f_Y⊗id_X).  Rebracketing inside the rotation
identities is done by precomposing with the associator, as in duality.py.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braided import (
    TwistData, canonical_double_twist, canonical_gamma, compute_vartheta, enumerate_twists,
    is_twist,
)
from .core import (
    MorId, NatFamily, StructureError, TheoremViolation, ValidationReport, check_naturality,
    enumerate_nat_isos, identity_functor,
)
from .duality import (
    GVData, QuasiInverse, canonical_unit_isos, d_squared_monoidal, g_iso, quasi_inverse,
    yoneda_solve,
)
from .monoidal import BraidingData, check_monoidal_transformation, identity_monoidal_functor

__all__ = [
    "PivotalPsi", "PivotalCensus", "f_to_psi", "psi_to_f", "psi_is_functorial",
    "validate_pivotal_psi", "enumerate_pivotal", "pivotal_to_twist", "twist_to_pivotal",
    "pivotal_twist_report", "twist_involution", "ribbon_check", "enumerate_ribbon",
    "psi_from_twist",
]


@dataclass(frozen=True, eq=False)
class PivotalPsi:
    """``table[(x, y)][φ] = ψ_{X,Y}(φ)``."""

    table: dict[tuple[int, int], dict[MorId, MorId]]

    def __call__(self, x: int, y: int, phi: MorId) -> MorId:
        return self.table[(x, y)][phi]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PivotalPsi) and self.table == other.table

    __hash__ = None  # type: ignore[assignment]


def f_to_psi(gv: GVData, f: NatFamily) -> PivotalPsi:
    cat, m = gv.cat, gv.m
    table = {}
    for x in range(cat.n):
        for y in range(cat.n):
            fwd, _ = g_iso(gv, x, y)
            fy = m.rw(f[y], x)
            table[(x, y)] = {phi: cat.compose(gphi, fy) for phi, gphi in fwd.items()}
    return PivotalPsi(table)


def psi_to_f(gv: GVData, psi: PivotalPsi) -> NatFamily:
    """The f making the triangle with g commute; StructureError if ψ is not natural."""
    cat = gv.cat
    D2 = gv.D2()
    comps = []
    for y in range(cat.n):
        def fam(x: int, phi: MorId, y=y) -> MorId:
            _, ginv = g_iso(gv, x, y)
            return psi(x, y, ginv[phi])
        comps.append(yoneda_solve(gv, D2(y), y, fam))
    return NatFamily(identity_functor(cat), D2, tuple(comps))


def psi_from_twist(gv: GVData, b: BraidingData, theta: TwistData) -> PivotalPsi:
    """ψ_{X,Y}(φ) = φ∘β_{Y,X}∘(θ_Y⊗id_X), written without D."""
    cat, m = gv.cat, gv.m
    table = {}
    for x in range(cat.n):
        for y in range(cat.n):
            pre = cat.compose(b.b(y, x), m.rw(theta[y], x))
            table[(x, y)] = {phi: cat.compose(phi, pre) for phi in cat.hom(m.t(x, y), gv.K)}
    return PivotalPsi(table)


def psi_is_functorial(gv: GVData, psi: PivotalPsi) -> bool:
    """Each ψ_{X,Y} is a bijection onto Hom(Y⊗X, K) and ψ is natural in both slots.

    Naturality: ψ_{X,Y}(φ∘(u⊗v)) = ψ_{X',Y'}(φ)∘(v⊗u) for u: X→X', v: Y→Y';
    it suffices to check u and v separately.
    """
    cat, m, K = gv.cat, gv.m, gv.K
    for x in range(cat.n):
        for y in range(cat.n):
            if sorted(psi.table[(x, y)].values()) != sorted(cat.hom(m.t(y, x), K)):
                return False
    for u in cat.morphisms:
        for y in range(cat.n):
            for phi in cat.hom(m.t(u.dst, y), K):
                if psi(u.src, y, cat.compose(phi, m.rw(u, y))) != \
                        cat.compose(psi(u.dst, y, phi), m.lw(y, u)):
                    return False
            for phi in cat.hom(m.t(y, u.dst), K):
                if psi(y, u.src, cat.compose(phi, m.lw(y, u))) != \
                        cat.compose(psi(y, u.dst, phi), m.rw(u, y)):
                    return False
    return True


def _pretty2(gv: GVData, psi: PivotalPsi) -> list[str]:
    cat, m, K = gv.cat, gv.m, gv.K
    bad = []
    n = cat.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for phi in cat.hom(m.t(m.t(z, x), y), K):
                    p1 = psi(m.t(z, x), y, phi)
                    p2 = psi(m.t(y, z), x, cat.compose(p1, m.a(y, z, x)))
                    p3 = psi(m.t(x, y), z, cat.compose(p2, m.a(x, y, z)))
                    if cat.compose(p3, m.a(z, x, y)) != phi:
                        bad.append(f"rotation fails at ({cat.objects[x]}, {cat.objects[y]}, "
                                   f"{cat.objects[z]}) on {cat.label(phi)}")
    return bad


def _pretty1(gv: GVData, psi: PivotalPsi) -> list[str]:
    cat, m, K = gv.cat, gv.m, gv.K
    bad = []
    for x in range(cat.n):
        for y in range(cat.n):
            for phi in cat.hom(m.t(x, y), K):
                if psi(y, x, psi(x, y, phi)) != phi:
                    bad.append(f"ψψ ≠ id at ({cat.objects[x]}, {cat.objects[y]}) on {cat.label(phi)}")
    return bad


def _rotation_split(gv: GVData, psi: PivotalPsi) -> bool:
    """ψ_{X⊗Y,Z}∘ψ_{Y⊗Z,X} = ψ_{Y,Z⊗X}, with the associators inserted."""
    cat, m, K = gv.cat, gv.m, gv.K
    n = cat.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for phi in cat.hom(m.t(y, m.t(z, x)), K):
                    lhs = psi(m.t(x, y), z, cat.compose(
                        psi(m.t(y, z), x, cat.compose(phi, m.a(y, z, x))), m.a(x, y, z)))
                    rhs = cat.compose(psi(y, m.t(z, x), phi), m.ainv(z, x, y))
                    if lhs != rhs:
                        return False
    return True


def _psi_trivial_on_unit(gv: GVData, psi: PivotalPsi, x: int, unit_first: bool) -> bool:
    """ψ_{𝟙,X} = id (unit_first) or ψ_{X,𝟙} = id, read through the unitors."""
    cat, m, K = gv.cat, gv.m, gv.K
    one = m.unit
    for rho in cat.hom(x, K):
        if unit_first:
            if psi(one, x, cat.compose(rho, m.l(x))) != cat.compose(rho, m.r(x)):
                return False
        elif psi(x, one, cat.compose(rho, m.r(x))) != cat.compose(rho, m.l(x)):
            return False
    return True


def validate_pivotal_psi(gv: GVData, psi: PivotalPsi) -> ValidationReport:
    """Rotation and involution identities.

    The involution identity is decided twice: directly, and (when rotation
    holds) by the shortcut ψ_{K,𝟙} = id.  Disagreement is a theorem violation.
    """
    report = ValidationReport(subject="pivotal structure ψ")
    if not psi_is_functorial(gv, psi):
        report.malformed("ψ is not functorial")
        return report
    rot = _pretty2(gv, psi)
    inv = _pretty1(gv, psi)
    for msg in rot[:5] + inv[:5]:
        report.fail(msg)
    report.info["rotation"] = not rot
    report.info["involution"] = not inv
    if not rot:
        shortcut = _psi_trivial_on_unit(gv, psi, gv.K, unit_first=False)
        report.info["involution_via_shortcut"] = shortcut
        if shortcut != (not inv):
            raise TheoremViolation("ψ_{K,1} = id disagrees with the direct involution check")
        if gv.is_r_category() and inv:
            raise TheoremViolation("rotation holds on an r-category but involution fails")
    return report


@dataclass
class PivotalCensus:
    """Everything enumerate_pivotal learns about Id ≅ D²."""

    natural_isos: int
    monoidal: list[NatFamily] = field(default_factory=list)
    pivotal: list[NatFamily] = field(default_factory=list)

    def counts(self) -> dict:
        return {"natural_isos": self.natural_isos, "monoidal_isos": len(self.monoidal),
                "pivotal": len(self.pivotal)}


def _is_monoidal_f(gv: GVData, qi: QuasiInverse, f: NatFamily) -> bool:
    d2 = d_squared_monoidal(gv, qi)
    return check_monoidal_transformation(f, identity_monoidal_functor(gv.m), d2, gv.m).ok


def _df1(gv: GVData, f: NatFamily) -> bool:
    cat, D = gv.cat, gv.D
    return all(f[D(x)] == cat.inv(D(f[x])) for x in range(cat.n))


def enumerate_pivotal(gv: GVData, qi: QuasiInverse | None = None) -> PivotalCensus:
    """Brute force over all natural isomorphisms Id ≅ D².

    Keeps the monoidal ones, then those with f_K the canonical K ≅ D²K.  The
    lemmas relating f to ψ are checked on every natural isomorphism, not only
    on the survivors.
    """
    qi = qi or quasi_inverse(gv)
    cat, m = gv.cat, gv.m
    ddK = canonical_unit_isos(gv, qi).ddK
    one, K = m.unit, gv.K
    everything = enumerate_nat_isos(identity_functor(cat), gv.D2(), cat)
    census = PivotalCensus(len(everything))
    for f in everything:
        psi = f_to_psi(gv, f)
        if psi_to_f(gv, psi).components != f.components:
            raise TheoremViolation("f → ψ → f is not the identity")
        monoidal = _is_monoidal_f(gv, qi, f)
        if monoidal != _rotation_split(gv, psi):
            raise TheoremViolation("monoidality of f disagrees with the split rotation identity")
        if (not _pretty1(gv, psi)) != _df1(gv, f):
            raise TheoremViolation("ψψ = id disagrees with f_D = D(f)⁻¹")
        a = f[K] == ddK
        bb = all(_psi_trivial_on_unit(gv, psi, x, unit_first=True) for x in range(cat.n))
        c = psi(one, K, m.l(K)) == m.r(K)
        if not (a == bb == c):
            raise TheoremViolation("f_K canonical, ψ_{1,X} = id and ψ_{1,K}(id) = id disagree")
        report = validate_pivotal_psi(gv, psi)
        is_pivotal = report.ok
        if is_pivotal != (monoidal and a):
            raise TheoremViolation("pivotal ψ does not match monoidal f with canonical f_K")
        if monoidal:
            census.monoidal.append(f)
            if gv.is_r_category() and not a:
                raise TheoremViolation("monoidal f on an r-category has non-canonical f_K")
        if is_pivotal:
            if not _df1(gv, f):
                raise TheoremViolation("pivotal f violates f_D = D(f)⁻¹")
            census.pivotal.append(f)
    return census


def pivotal_to_twist(gv: GVData, qi: QuasiInverse, b: BraidingData, f: NatFamily) -> TwistData:
    """θ = (ϑ⁺)⁻¹∘f."""
    cat = gv.cat
    tp = compute_vartheta(gv, qi, b, 1)
    return TwistData(tuple(cat.compose(cat.inv(tp[x]), f[x]) for x in range(cat.n)), 1)


def twist_to_pivotal(gv: GVData, qi: QuasiInverse, b: BraidingData, theta: TwistData) -> NatFamily:
    cat = gv.cat
    tp = compute_vartheta(gv, qi, b, 1)
    return NatFamily(identity_functor(cat), gv.D2(),
                     tuple(cat.compose(tp[x], theta[x]) for x in range(cat.n)))


def pivotal_twist_report(gv: GVData, b: BraidingData, census: PivotalCensus | None = None
                         ) -> ValidationReport:
    """f ↦ (ϑ⁺)⁻¹f against the independently enumerated twists with θ_K = id."""
    qi = quasi_inverse(gv)
    cat, K = gv.cat, gv.K
    census = census or enumerate_pivotal(gv, qi)
    report = ValidationReport(subject="pivotal ↔ twist")
    twists = [t for t in enumerate_twists(b) if cat.is_identity(t[K])]
    images = []
    for f in census.pivotal:
        th = pivotal_to_twist(gv, qi, b, f)
        if not is_twist(b, th.components, 1) or not cat.is_identity(th[K]):
            report.fail("image of a pivotal structure is not a twist with θ_K = id")
        if twist_to_pivotal(gv, qi, b, th).components != f.components:
            report.fail("round trip f → θ → f is not exact")
        if psi_from_twist(gv, b, th) != f_to_psi(gv, f):
            report.fail("ψ from f and ψ from the twist disagree")
        images.append(th.components)
    if sorted(images) != sorted(t.components for t in twists):
        report.fail("pivotal structures and twists with θ_K = id are not in bijection")
    report.info["pivotal"] = len(census.pivotal)
    report.info["twists_trivial_on_K"] = len(twists)
    return report


def _transport(gv: GVData, qi: QuasiInverse, theta: TwistData) -> tuple[MorId, ...]:
    """X ↦ ε_X⁻¹∘D⁻¹(θ_{DX})∘ε_X."""
    cat, D = gv.cat, gv.D
    out = []
    for x in range(cat.n):
        e = qi.counit[x]
        out.append(cat.seq(e, qi.Dinv(theta[D(x)]), cat.inv(e)))
    return tuple(out)


def twist_involution(gv: GVData, qi: QuasiInverse, b: BraidingData, theta: TwistData) -> TwistData:
    """θ' = θ⁻¹C, with the properties of the involution asserted."""
    cat, K = gv.cat, gv.K
    if theta.power != 1 or not is_twist(b, theta.components, 1):
        raise StructureError("twist_involution needs a twist")
    C, _ = canonical_double_twist(gv, qi, b)
    n = cat.n
    prime = TwistData(tuple(cat.compose(cat.inv(theta[x]), C[x]) for x in range(n)), 1)
    if not is_twist(b, prime.components, 1):
        raise TheoremViolation("θ' is not a twist")
    if any(cat.compose(theta[x], prime[x]) != C[x] or
           cat.compose(prime[x], theta[x]) != C[x] for x in range(n)):
        raise TheoremViolation("θθ' ≠ C")
    back = tuple(cat.compose(cat.inv(prime[x]), C[x]) for x in range(n))
    if back != theta.components:
        raise TheoremViolation("θ'' ≠ θ")
    if cat.is_identity(theta[K]):
        if not cat.is_identity(prime[K]):
            raise TheoremViolation("θ_K = id but θ'_K ≠ id")
        if _transport(gv, qi, theta) != prime.components:
            raise TheoremViolation("θ' ≠ D⁻¹(θ_D)")
        gamma, _ = canonical_gamma(gv, qi, b)
        f = twist_to_pivotal(gv, qi, b, theta)
        f2 = twist_to_pivotal(gv, qi, b, prime)
        D2 = gv.D2()
        if any(cat.compose(f[D2(x)], f2[x]) != gamma[x] for x in range(n)):
            raise TheoremViolation("ff' ≠ γ")
    return prime


def _without_d(gv: GVData, theta: TwistData) -> bool:
    cat, m, K = gv.cat, gv.m, gv.K
    for x in range(cat.n):
        for y in range(cat.n):
            left, right = m.lw(x, theta[y]), m.rw(theta[x], y)
            for B in cat.hom(m.t(x, y), K):
                if cat.compose(B, left) != cat.compose(B, right):
                    return False
    return True


def ribbon_check(gv: GVData, qi: QuasiInverse, b: BraidingData, theta: TwistData) -> bool:
    """Three independent ribbon verdicts; they must agree."""
    cat, K = gv.cat, gv.K
    if theta.power != 1 or not is_twist(b, theta.components, 1):
        raise StructureError("ribbon_check needs a twist (got a non-twist or a double-twist)")
    v1 = _transport(gv, qi, theta) == theta.components
    v2 = cat.is_identity(theta[K]) and twist_involution(gv, qi, b, theta).components == theta.components
    v3 = _without_d(gv, theta)
    if not (v1 == v2 == v3):
        raise TheoremViolation(f"ribbon verdicts disagree: direct={v1}, involution={v2}, without D={v3}")
    return v1


def enumerate_ribbon(gv: GVData, b: BraidingData, census: PivotalCensus | None = None
                     ) -> list[TwistData]:
    """Ribbon twists; also checks they match the involution-fixed pivotal structures."""
    qi = quasi_inverse(gv)
    cat, K = gv.cat, gv.K
    ribbons = [t for t in enumerate_twists(b) if ribbon_check(gv, qi, b, t)]
    census = census or enumerate_pivotal(gv, qi)
    fixed = []
    for f in census.pivotal:
        th = pivotal_to_twist(gv, qi, b, f)
        prime = twist_involution(gv, qi, b, th)
        if twist_involution(gv, qi, b, prime).components != th.components:
            raise TheoremViolation("involution orbit larger than 2")
        if prime.components == th.components:
            fixed.append(th.components)
    if sorted(fixed) != sorted(t.components for t in ribbons):
        raise TheoremViolation("ribbons differ from involution-fixed pivotal structures")
    return ribbons
