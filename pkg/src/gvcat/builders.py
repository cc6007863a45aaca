"""Deterministic builders for the bundled desk-scale categories.

All of them are skeletal "scalar" categories: every nonzero object has
End = ℤ/n, every other hom-set is the single zero morphism, and structure
morphisms are scalars.  The zero morphism always has index 0, scalar k has
index k.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .core import FinCategory, MorId
from .monoidal import BraidingData, MonoidalData

__all__ = [
    "scalar_category", "scalar_monoidal", "build_trivial", "build_trivial_braided",
    "build_three_object_gv", "build_graded_lines", "build_extension_specimen",
    "build_semion", "scalar_braiding", "mor_label",
]


def mor_label(k: int, x: str, y: str) -> str:
    return f"{k}@{x}>{y}"


def scalar_category(name: str, objects: Sequence[str], linear: Sequence[bool], n: int
                    ) -> FinCategory:
    """Objects flagged ``linear`` get End = ℤ/n; all other hom-sets are {0}."""
    homs = {}
    for x, ox in enumerate(objects):
        for y, oy in enumerate(objects):
            size = n if (x == y and linear[x]) else 1
            homs[(x, y)] = [mor_label(k, ox, oy) for k in range(size)]

    def comp(g: MorId, f: MorId) -> MorId:
        if f.src == f.dst == g.dst and linear[f.src]:
            return MorId(f.src, f.src, (g.index * f.index) % n)
        return MorId(f.src, g.dst, 0)

    def ident(x: int) -> MorId:
        return MorId(x, x, 1 if linear[x] else 0)

    return FinCategory.build(name, objects, homs, comp, ident)


def _scalar(cat: FinCategory, x: int, y: int, k: int) -> MorId:
    """Scalar k as a morphism x→y (zero unless x == y is linear)."""
    if x == y and cat.hom_size(x, x) > 1:
        return MorId(x, x, k % cat.hom_size(x, x))
    return MorId(x, y, 0)


def _scalar_of(cat: FinCategory, f: MorId) -> int:
    return f.index if f.src == f.dst and cat.hom_size(f.src, f.src) > 1 else 0


def scalar_monoidal(cat: FinCategory, unit: int, tensor: Callable[[int, int], int],
                    omega: Callable[[int, int, int], int] = lambda x, y, z: 1
                    ) -> MonoidalData:
    """Tensor of scalars is their product; associator components are ω(x, y, z)."""
    n = cat.n
    tobj = {(x, y): tensor(x, y) for x in range(n) for y in range(n)}
    tmor = {}
    for f in cat.morphisms:
        for g in cat.morphisms:
            s, d = tobj[(f.src, g.src)], tobj[(f.dst, g.dst)]
            tmor[(f, g)] = _scalar(cat, s, d, _scalar_of(cat, f) * _scalar_of(cat, g)) \
                if (f.src == f.dst and g.src == g.dst) else MorId(s, d, 0)
    assoc = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                s = tobj[(tobj[(x, y)], z)]
                assoc[(x, y, z)] = _scalar(cat, s, tobj[(x, tobj[(y, z)])], omega(x, y, z))
    lunit = tuple(_scalar(cat, tobj[(unit, x)], x, 1) for x in range(n))
    runit = tuple(_scalar(cat, tobj[(x, unit)], x, 1) for x in range(n))
    return MonoidalData(cat, unit, tobj, tmor, assoc, lunit, runit)


def scalar_braiding(m: MonoidalData, c: Callable[[int, int], int]) -> BraidingData:
    cat = m.cat
    beta = {(x, y): _scalar(cat, m.t(x, y), m.t(y, x), c(x, y))
            for x in range(cat.n) for y in range(cat.n)}
    return BraidingData(m, beta)


def build_trivial() -> MonoidalData:
    cat = scalar_category("trivial", ["1"], [False], 1)
    return scalar_monoidal(cat, 0, lambda x, y: 0)


def build_trivial_braided() -> BraidingData:
    return scalar_braiding(build_trivial(), lambda x, y: 1)


def build_three_object_gv(n: int = 5) -> MonoidalData:
    """E1: objects 0, 𝟙, K with End 𝟙 = End K = ℤ/n, K⊗K = 0, 0 absorbing."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    cat = scalar_category(f"E1_z{n}", ["0", "1", "K"], [False, True, True], n)
    ZERO, ONE, K = 0, 1, 2

    def tensor(x: int, y: int) -> int:
        if x == ONE:
            return y
        if y == ONE:
            return x
        return ZERO

    return scalar_monoidal(cat, ONE, tensor)


def build_graded_lines(group_order: int = 2, scalar_modulus: int = 3, sign: int = -1,
                       q: int | None = None, omega: int = 1, name: str | None = None
                       ) -> BraidingData:
    """E2 (and its cyclic relatives): ℤ/m-graded lines over ℤ/n.

    The braiding is β_{g,h} = q^{gh}; for ``group_order == 2`` the default
    q is ``sign``, so β_{1,1} = sign.  The associator on (g, h, k) is
    omega^{g(h+k-[h+k])/m}, the standard ℤ/m 3-cocycle (needs omega^m = 1).
    Whether the hexagons hold is left to ``validate_braiding``.
    """
    m, n = group_order, scalar_modulus
    if q is None:
        q = sign
    q %= n
    omega %= n
    if name is None:
        name = f"E2_z{n}_{'minus' if q == n - 1 else 'plus'}" if m == 2 and q in (1, n - 1) \
            else f"lines_z{m}_z{n}_q{q}"
        if omega != 1:
            name += f"_w{omega}"
    cat = scalar_category(name, [str(g) for g in range(m)], [True] * m, n)
    mon = scalar_monoidal(cat, 0, lambda x, y: (x + y) % m,
                          lambda g, h, k: pow(omega, g * ((h + k) - (h + k) % m) // m, n))
    return scalar_braiding(mon, lambda x, y: pow(q, x * y, n))


def build_semion(scalar_modulus: int = 5) -> BraidingData:
    """ℤ/2 lines with associator -1 on (1, 1, 1) and β_{1,1} a square root of -1."""
    n = scalar_modulus
    roots = [q for q in range(n) if (q * q) % n == (n - 1) % n]
    if not roots:
        raise ValueError(f"-1 has no square root mod {n}")
    return build_graded_lines(2, n, q=roots[0], omega=-1, name=f"semion_z{n}")


def build_extension_specimen():
    """The r-extension of E1 (ℤ/5) along the zero morphism K → 𝟙."""
    from .duality import find_dualizing
    from .extension import monoidal_extension
    e1 = build_three_object_gv(5)
    gv = find_dualizing(e1)[0]
    f = MorId(gv.K, e1.unit, 0)
    return monoidal_extension(gv, f)
