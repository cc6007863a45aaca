"""Adjoin a new unit to E1 along f = 0: K -> 1, then recover (E1, K, f).

The extended category has 1' as an idempotent arrow target, and cutting
down along it gives back the original tables exactly.
"""

from gvcat.builders import build_three_object_gv
from gvcat.core import MorId
from gvcat.duality import dualizing_from_K
from gvcat.extension import monoidal_extension, roundtrip_check, verify_r_extension
from gvcat.rigidity import rigidity_report

m = build_three_object_gv(5)
gv = dualizing_from_K(m, m.cat.obj("K"))
f = MorId(gv.K, m.unit, 0)

ex = monoidal_extension(gv, f)
cat = ex.M.cat
print("objects:", list(cat.objects), " unit:", cat.objects[ex.M.unit])
print("|Hom(I, I)| =", cat.hom_size(ex.one, ex.one))

new_gv, report = verify_r_extension(ex)
print("new unit dualizing, duality matches:", report.ok)
print("rigid:", rigidity_report(new_gv).info["rigid"])

rt = roundtrip_check(gv, f)
print("round trip:", "ok" if rt.ok else rt.violations)
