# Great spheres on the unit sphere: every great hypersphere meets every
# great circle.  Both are cut by linear subspaces through the origin, so
# a meeting point is a common direction scaled to unit length.  The
# scaling is where exactness gets interesting: the squared norm of the
# direction needs a square root inside the scalar field the geometry is
# presented in, and the code falls back to floats only when there is
# none, flagging the result.

from inversive.euclid import GreatFlat, great_intersection, verify_flag_euclidean
from inversive.exactnum import THETA

# A great circle of S^2 comes from a plane through the origin; the great
# hypersphere of S^2 is another such circle.
equator = GreatFlat.span([[1, 0, 0], [0, 1, 0]])

# Rational data with a perfect-square norm stays rational: direction
# (3, 4, 0) has squared norm 25.
meet = great_intersection(equator, GreatFlat.span([[3, 4, 0], [0, 0, 1]]))
print("exact:", meet.exact)
for p in meet.points:
    print("  ", p)

# Squared norm 2 has no rational root, but presented over Q(t), t^4 = 2,
# the root is t^2 and the answer is still exact.
tilted = GreatFlat.span([[THETA ** 2, THETA ** 2, 0], [0, 0, THETA ** 0]])
meet = great_intersection(equator, tilted)
print("exact:", meet.exact)
for p in meet.points:
    print("  ", p)

# Squared norm 5 has no root even there, so the same call falls back to
# floating point and says so.
meet = great_intersection(equator, GreatFlat.span([[1, 2, 0], [0, 0, 1]]))
print("exact:", meet.exact)
for p in meet.points:
    print("  ", p)

# Independence from the presented basis: the span is canonicalized, so
# wildly different spanning sets give the same subspace key.
assert GreatFlat.span([[6, 8, 0], [3, 4, 5]]).key() == \
    GreatFlat.span([[3, 4, 0], [0, 0, 1]]).key()
print("basis canonicalization: ok")

# The spherical flag coloring uses n+1 colors on S^n and no great
# hypersphere collects all of them; a seeded scan confirms on S^2.
report = verify_flag_euclidean(2, per_class=8, seed=3)
print("flag scan: %d violations over %d great circles, at most %d colors" %
      (len(report["violations"]), report["circles_checked"],
       report["max_colors"]))
