# # Storage versus repair traffic
#
# A file of size 1 is spread over n nodes. Any k of them must be enough to
# rebuild it, and r nodes that fail together are rebuilt by r newcomers that
# each talk to d survivors and to each other.

from coopregen import SystemParams
from coopregen.core import fmt
from coopregen.tradeoff import build_curve, storage_efficiency

p = SystemParams.of(5, 4, 3)
curve = build_curve(p)
for v in curve.vertices:
    print(f"{v.label():10s} gamma={fmt(v.gamma):6s} alpha={fmt(v.alpha)}")

# The two ends: least storage per node, and least repair traffic.
lo, hi = curve.horizontal_ray_origin, curve.vertical_ray_origin
print("efficiency at the cheap-repair end:", fmt(storage_efficiency(hi, p.n)))

# More cooperating newcomers push the whole curve down.
for r in (1, 3, 5, 7):
    c = build_curve(SystemParams.of(21, 20, r))
    print(r, len(c.vertices), "vertices, min repair", fmt(c.vertical_ray_origin.gamma))
