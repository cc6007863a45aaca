"""Pivotal census on the three-object example E1 over Z/5.

Every natural isomorphism Id => D² is listed with whether it is monoidal
and whether it is pivotal (monoidal with the canonical component at K).
"""

from gvcat.builders import build_three_object_gv
from gvcat.duality import dualizing_from_K, quasi_inverse
from gvcat.pivotal import enumerate_pivotal

m = build_three_object_gv(5)
gv = dualizing_from_K(m, m.cat.obj("K"))
census = enumerate_pivotal(gv, quasi_inverse(gv))
cat = gv.cat

print("counts:", census.counts())
piv = {f.components for f in census.pivotal}
for f in census.monoidal:
    comps = ", ".join(f"{cat.objects[x]}: {cat.label(c)}" for x, c in enumerate(f.components))
    print(f"  [{comps}]  pivotal={f.components in piv}")
