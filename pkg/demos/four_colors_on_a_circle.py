"""
Hunting a four-colored circle
=============================

Color the two coordinate axes of the plane (plus infinity) in five
classes keyed to norm classes in the field Q(t), t^4 = 2: y-axis points
whose coordinate sits in t*Q* get 2 and t^3*Q* get 3, x-axis points in
sqrt(2)*Q* get 4 and Q* get 5, and everything left over on the lines
gets 1.  No circle collects four of those colors from the lines.  Spill
color 1 over the rest of the plane, though, and a four-colored circle
appears; this script finds one.
"""

from pathlib import Path

from inversive.chromatic import find_polychromatic
from inversive.colorings import TwoLine, sample_class
from inversive.svg import emit_svg

# The lines-only coloring first.  A budgeted search over seeded class
# samples comes back empty handed: a circle meets each line twice at
# most, and the norm-class bookkeeping blocks every four-color pattern.
plain = TwoLine()
print("two-line coloring, %d colors" % plain.k)
for i in range(1, plain.k + 1):
    pts = sample_class(plain, i, 2, seed=7)
    print("  class %d sample: %s" % (i, ", ".join(str(p) for p in pts)))

missing = find_polychromatic(plain, 4, budget=600, seed=0)
print("four-colored circle within budget:", missing)

# Extended to the full plane, class 1 gains off-line points, and the
# search succeeds.
extended = TwoLine(extended=True)
witness = find_polychromatic(extended, 4, budget=600, seed=0)
assert witness is not None
print()
print("extended coloring witness")
print("  circle:", witness.sphere)
for p, c in witness.on_points:
    print("  color %d at %s" % (c, p))

# The witness object re-checks itself on construction, so reaching this
# line means every listed point really lies on the circle and the four
# colors are genuinely distinct.
print("  distinct colors:", sorted(witness.color_set))

out = Path(__file__).with_name("four_color_witness.svg")
emit_svg(witness, out)
print("wrote", out.name)
