"""Twists, the canonical double twist and ribbon structures on E2 (both signs)."""

from gvcat.braided import canonical_double_twist, canonical_gamma, enumerate_twists
from gvcat.builders import build_graded_lines
from gvcat.duality import dualizing_from_K, quasi_inverse
from gvcat.pivotal import enumerate_ribbon, ribbon_check

for sign in (-1, 1):
    b = build_graded_lines(sign=sign)
    gv = dualizing_from_K(b.base, 0)
    qi = quasi_inverse(gv)
    cat = gv.cat
    show = lambda comps: "[" + ", ".join(cat.label(c) for c in comps) + "]"
    print(cat.name)
    C, _ = canonical_double_twist(gv, qi, b)
    gamma, _ = canonical_gamma(gv, qi, b)
    print("  C =", show(C.components), " gamma =", show(gamma.components))
    for t in enumerate_twists(b):
        print("  twist", show(t.components), " ribbon:", ribbon_check(gv, qi, b, t))
    print("  ribbon count:", len(enumerate_ribbon(gv, b)))
