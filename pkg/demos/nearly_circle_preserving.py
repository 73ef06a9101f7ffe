"""How badly can a map with finite image respect circles?

A map is weakly circle-preserving when the image of any circle lies on
some circle.  Constant maps qualify trivially, and so does any map whose
image has at most three points.  A four-point image can still qualify,
via a coloring of the plane in which no circle meets all four classes.
Five image points in circular general position cannot: a domain circle
collecting four classes exists, and its four images are then never
concyclic.  This script exhibits both halves.
"""

from fractions import Fraction

from inversive.geom import Point
from inversive.wcp import (build_sharp_map, five_point_refute, sample_circles,
                           wcp_check, FiniteImageMap)
from inversive.colorings import TwoLine

O = Point.finite((Fraction(0), Fraction(0)))
E1 = Point.finite((Fraction(1), Fraction(0)))
E2 = Point.finite((Fraction(0), Fraction(1)))
INF = Point.infinity(2)

# Four non-concyclic image points.  build_sharp_map colors the plane by
# the flag classes (origin, infinity, punctured first axis, everything
# else) and sends each class to one image point.
sharp = build_sharp_map([O, E1, INF, E2])
print("sharp four-point map, image:", ", ".join(str(p) for p in sharp.image))

samples = sample_circles(300, seed=11)
violation = wcp_check(sharp, samples)
print("violations over %d sampled circles: %s" % (len(samples), violation))

# Now a fifth image point.  The extended two-line coloring supplies a
# five-class domain in which some circle does meet four classes, and the
# five images below are in circular general position.
five = FiniteImageMap(
    TwoLine(extended=True),
    (O, E1, INF, E2, Point.finite((Fraction(1), Fraction(2)))),
    {1: 0, 2: 1, 3: 2, 4: 3, 5: 4},
)
refutation = five_point_refute(five, budget=600, seed=0)

print()
print("five-point map refuted")
print("  domain circle:", refutation.witness.sphere)
for p, q in zip(refutation.domain_points, refutation.images):
    print("  %s  ->  %s" % (p, q))
print("  the four images are not concyclic, so no circle carries them")
