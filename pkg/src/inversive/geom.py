"""Points of extended space, generalized spheres, and incidence predicates.

A generalized sphere in R^n with the point at infinity adjoined is the zero
set of c*<x,x> + <b,x> + a with <b,b> - 4ca > 0; c = 0 gives an extended
hyperplane through infinity. Everything here is backend-generic: exact over
rationals or the quartic field, tolerance-based over floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from . import _linalg
from .exactnum import (
    BackendMismatch,
    Quartic2,
    common_kind,
    is_zero,
    promote,
    sign_of,
)

Scalar = Union[int, Fraction, Quartic2, float]


class GeometryError(ValueError):
    pass


class DegenerateSphereError(GeometryError):
    pass


class DegenerateConfigError(GeometryError):
    pass


def vec_dot(u: Sequence, v: Sequence):
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def vec_sub(u: Sequence, v: Sequence) -> Tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u: Sequence, v: Sequence) -> Tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(s, u: Sequence) -> Tuple:
    return tuple(s * a for a in u)


def vec_is_zero(u: Sequence) -> bool:
    return all(is_zero(a) for a in u)


@dataclass(frozen=True)
class Point:
    """A point of R^n or the single point at infinity."""

    coords: Optional[Tuple[Scalar, ...]]
    dim: int

    @classmethod
    def finite(cls, coords: Sequence[Scalar]) -> "Point":
        coords = tuple(coords)
        if not coords:
            raise GeometryError("a point needs at least one coordinate")
        k = common_kind(coords)
        return cls(tuple(promote(x, k) for x in coords), len(coords))

    @classmethod
    def infinity(cls, dim: int) -> "Point":
        return cls(None, dim)

    @property
    def is_infinity(self) -> bool:
        return self.coords is None

    def backend(self) -> str:
        if self.coords is None:
            return "rational"
        return common_kind(self.coords)

    def __repr__(self) -> str:
        if self.coords is None:
            return "Point.infinity(%d)" % self.dim
        return "Point(%s)" % (self.coords,)


def _uniform(points: Sequence[Point]) -> Tuple[List[Point], str]:
    """Promote a family of points to one shared backend."""
    dims = {p.dim for p in points}
    if len(dims) > 1:
        raise GeometryError("points live in different ambient dimensions")
    kinds = {p.backend() for p in points if not p.is_infinity}
    if "float" in kinds and kinds != {"float"}:
        raise BackendMismatch("cannot mix float with exact points")
    k = "float" if "float" in kinds else ("quartic" if "quartic" in kinds else "rational")
    out = []
    for p in points:
        if p.is_infinity:
            out.append(p)
        else:
            out.append(Point(tuple(promote(x, k) for x in p.coords), p.dim))
    return out, k


class SideLabel(Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class Hypersphere:
    """Canonical coefficients (c, b, a) of a nondegenerate generalized sphere.

    Exact backends scale so the first nonzero of (c, b_1..b_n, a) equals 1;
    the float backend scales to unit coefficient norm with the same sign rule.
    """

    c: Scalar
    b: Tuple[Scalar, ...]
    a: Scalar

    @classmethod
    def make(cls, c: Scalar, b: Sequence[Scalar], a: Scalar) -> "Hypersphere":
        entries = [c, *b, a]
        k = common_kind(entries)
        entries = [promote(x, k) for x in entries]
        lead = None
        for x in entries:
            if not is_zero(x):
                lead = x
                break
        if lead is None:
            raise DegenerateSphereError("zero coefficient vector")
        if k == "float":
            norm = sum(x * x for x in entries) ** 0.5
            scale = (1.0 / norm) if lead > 0 else (-1.0 / norm)
            entries = [x * scale for x in entries]
        else:
            entries = [x / lead for x in entries]
        c, b, a = entries[0], tuple(entries[1:-1]), entries[-1]
        disc = vec_dot(b, b) - 4 * c * a
        if sign_of(disc) <= 0:
            raise DegenerateSphereError("discriminant <b,b> - 4ca is not positive")
        return cls(c, b, a)

    @property
    def dim(self) -> int:
        return len(self.b)

    @property
    def is_flat(self) -> bool:
        return is_zero(self.c)

    def center(self) -> Point:
        if self.is_flat:
            raise GeometryError("an extended hyperplane has no center")
        return Point.finite(vec_scale(-1 / (2 * self.c), self.b))

    def radius_sq(self) -> Scalar:
        if self.is_flat:
            raise GeometryError("an extended hyperplane has no radius")
        disc = vec_dot(self.b, self.b) - 4 * self.c * self.a
        return disc / (4 * self.c * self.c)

    def evaluate(self, p: Point) -> Scalar:
        if p.is_infinity:
            raise GeometryError("evaluate expects a finite point")
        x = p.coords
        return self.c * vec_dot(x, x) + vec_dot(self.b, x) + self.a

    def contains(self, p: Point) -> bool:
        if p.is_infinity:
            return is_zero(self.c)
        return is_zero(self.evaluate(p))

    def key(self) -> tuple:
        if common_kind([self.c, *self.b, self.a]) == "float":
            return (round(self.c, 9), tuple(round(x, 9) for x in self.b), round(self.a, 9))
        return (self.c, self.b, self.a)


def on_sphere(p: Point, s: Hypersphere) -> bool:
    return s.contains(p)


def side(p: Point, s: Hypersphere) -> SideLabel:
    """Inside/On/Outside for spheres, Positive/On/Negative for flats.

    Canonical scaling pins the orientation, so labels are reproducible.
    """
    if s.is_flat:
        if p.is_infinity:
            return SideLabel.ON
        sg = sign_of(s.evaluate(p))
        if sg == 0:
            return SideLabel.ON
        return SideLabel.POSITIVE if sg > 0 else SideLabel.NEGATIVE
    if p.is_infinity:
        return SideLabel.OUTSIDE
    sg = sign_of(s.evaluate(p))
    if sg == 0:
        return SideLabel.ON
    return SideLabel.INSIDE if sg < 0 else SideLabel.OUTSIDE


def separated(x: Point, y: Point, s: Hypersphere) -> bool:
    """True when the sphere separates x from y; either point on it is an error."""
    lx, ly = side(x, s), side(y, s)
    if lx == SideLabel.ON or ly == SideLabel.ON:
        raise GeometryError("separation is undefined for points on the sphere")
    return lx != ly


def lift_row(p: Point, backend: str = "rational") -> List[Scalar]:
    """Row (<x,x>, x, 1) of the sphere-coefficient system; infinity lifts to
    (1, 0, .., 0), the equation forcing c = 0."""
    one = promote(1, backend) if backend != "rational" else Fraction(1)
    zero = one - one
    if p.is_infinity:
        return [one] + [zero] * p.dim + [zero]
    x = p.coords
    return [vec_dot(x, x), *x, one]


def _check_distinct(points: Sequence[Point], where: str) -> None:
    seen = []
    for p in points:
        if p in seen:
            raise DegenerateConfigError("duplicate point in %s" % where)
        seen.append(p)
    if sum(1 for p in points if p.is_infinity) > 1:
        raise DegenerateConfigError("more than one point at infinity")


def sphere_through(points: Sequence[Point]) -> Hypersphere:
    """The unique generalized (n-1)-sphere through n+1 points of R^n_inf.

    Affinely degenerate inputs (or any containing infinity) come back with
    c = 0. Inputs that fail to pin down a unique sphere raise.
    """
    points, k = _uniform(points)
    n = points[0].dim
    if len(points) != n + 1:
        raise GeometryError("need exactly n+1 points in dimension n")
    _check_distinct(points, "sphere_through")
    rows = [lift_row(p, k) for p in points]
    ns = _linalg.nullspace(rows, n + 2)
    if len(ns) != 1:
        raise DegenerateSphereError("points do not determine a unique sphere")
    vec = ns[0]
    return Hypersphere.make(vec[0], vec[1:-1], vec[-1])


def concyclic(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Whether four distinct points lie on one circle (or extended line).

    Rank of the 4 x (n+2) lifted matrix is at most 3 exactly on concyclic
    quadruples.
    """
    points, k = _uniform([p1, p2, p3, p4])
    _check_distinct(points, "concyclic")
    rows = [lift_row(p, k) for p in points]
    return _linalg.rank(rows, points[0].dim + 2) <= 3


def on_common_sphere(points: Sequence[Point]) -> bool:
    """Whether the given distinct points all lie on one generalized sphere of
    positive codimension. For n+2 points of R^n_inf this is the cospherical
    test; the lifted matrix drops rank exactly then."""
    pts, k = _uniform(points)
    _check_distinct(pts, "on_common_sphere")
    if not 3 <= len(pts) <= pts[0].dim + 2:
        raise GeometryError("need between 3 and n+2 points")
    rows = [lift_row(p, k) for p in pts]
    return _linalg.rank(rows, pts[0].dim + 2) < len(rows)


def second_intersection(s: Hypersphere, base: Point, direction: Sequence[Scalar]) -> Point:
    """The other point where the line from a sphere point along `direction`
    meets a genuine sphere, by Vieta on the restricted quadratic."""
    if s.is_flat:
        raise GeometryError("second_intersection needs a genuine sphere")
    if not s.contains(base) or base.is_infinity:
        raise GeometryError("base point must lie on the sphere")
    d = tuple(direction)
    if vec_is_zero(d):
        raise GeometryError("direction must be nonzero")
    denom = s.c * vec_dot(d, d)
    t2 = -(2 * s.c * vec_dot(base.coords, d) + vec_dot(s.b, d)) / denom
    if is_zero(t2):
        raise GeometryError("the line is tangent at the base point")
    return Point.finite(vec_add(base.coords, vec_scale(t2, d)))


class _CrossRatioInfinity:
    def __repr__(self) -> str:
        return "CR_INFINITY"


CR_INFINITY = _CrossRatioInfinity()


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _cdiv(x, y):
    d = y[0] * y[0] + y[1] * y[1]
    return ((x[0] * y[0] + x[1] * y[1]) / d, (x[1] * y[0] - x[0] * y[1]) / d)


def cross_ratio(z1: Point, z2: Point, z3: Point, z4: Point):
    """Cross ratio (z1-z3)(z2-z4) / ((z2-z3)(z1-z4)) in the plane.

    One input may be infinity; the two factors containing it cancel. Returns
    a (re, im) scalar pair, or CR_INFINITY if the denominator vanishes. The
    imaginary part is zero exactly when the four points are concyclic.
    """
    points, _ = _uniform([z1, z2, z3, z4])
    if points[0].dim != 2:
        raise GeometryError("cross_ratio is a planar operation")
    _check_distinct(points, "cross_ratio")
    z = [p.coords for p in points]
    inf_at = next((i for i, p in enumerate(points) if p.is_infinity), None)
    if inf_at is None:
        num = _cmul(vec_sub(z[0], z[2]), vec_sub(z[1], z[3]))
        den = _cmul(vec_sub(z[1], z[2]), vec_sub(z[0], z[3]))
    elif inf_at == 0:
        num, den = vec_sub(z[1], z[3]), vec_sub(z[1], z[2])
    elif inf_at == 1:
        num, den = vec_sub(z[0], z[2]), vec_sub(z[0], z[3])
    elif inf_at == 2:
        num, den = vec_sub(z[1], z[3]), vec_sub(z[0], z[3])
    else:
        num, den = vec_sub(z[0], z[2]), vec_sub(z[1], z[2])
    if vec_is_zero(den):
        return CR_INFINITY
    return _cdiv(num, den)


def _direction_sign(d: Sequence[Scalar]) -> int:
    """Orientation of a nonzero vector: the sign of its last nonzero
    coordinate (in the plane: positive iff above the x-axis, or on its
    nonnegative half)."""
    for x in reversed(list(d)):
        sg = sign_of(x)
        if sg != 0:
            return sg
    raise GeometryError("zero vector has no direction")


def signed_norm(p: Point, direction: Sequence[Scalar]) -> Scalar:
    """Signed distance from the origin along a registered line.

    The line is {t * direction} with an exactly-unit direction vector; the
    positively oriented representative makes N(t * d) = t, so collinear
    points multiply by plain scalar products.
    """
    if p.is_infinity:
        raise GeometryError("infinity has no signed norm")
    direction = tuple(direction)
    if not is_zero(vec_dot(direction, direction) - 1):
        raise GeometryError("direction must have exact unit norm")
    if _direction_sign(direction) < 0:
        direction = vec_scale(-1, direction)
    idx = next(i for i, x in enumerate(direction) if not is_zero(x))
    t = p.coords[idx] / direction[idx]
    if not vec_is_zero(vec_sub(p.coords, vec_scale(t, direction))):
        raise GeometryError("point is not on the registered line")
    return t


def power_condition(x: Scalar, xp: Scalar, y: Scalar, yp: Scalar) -> bool:
    """Equality of chord products x*x' = y*y', the exact concyclicity test
    for two point pairs on two lines through the origin."""
    return is_zero(x * xp - y * yp)


@dataclass(frozen=True)
class Flat:
    """Affine subspace with an orthogonal direction basis, always understood
    as extended through infinity."""

    basepoint: Tuple[Scalar, ...]
    basis: Tuple[Tuple[Scalar, ...], ...]

    @classmethod
    def through(cls, points: Sequence[Point]) -> "Flat":
        if any(p.is_infinity for p in points):
            raise GeometryError("Flat.through expects finite points")
        points, _ = _uniform(points)
        base = points[0].coords
        basis: List[Tuple] = []
        for p in points[1:]:
            v = _orthogonal_residual(vec_sub(p.coords, base), basis)
            if not vec_is_zero(v):
                basis.append(v)
        return cls(tuple(base), tuple(basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> int:
        return len(self.basepoint)

    def coords_of(self, p: Point) -> List[Scalar]:
        if p.is_infinity:
            raise GeometryError("infinity has no flat coordinates")
        v = vec_sub(p.coords, self.basepoint)
        ts = []
        for d in self.basis:
            t = vec_dot(v, d) / vec_dot(d, d)
            ts.append(t)
            v = vec_sub(v, vec_scale(t, d))
        if not vec_is_zero(v):
            raise GeometryError("point is not on the flat")
        return ts

    def point_at(self, ts: Sequence[Scalar]) -> Point:
        x = self.basepoint
        for t, d in zip(ts, self.basis):
            x = vec_add(x, vec_scale(t, d))
        return Point.finite(x)

    def contains(self, p: Point) -> bool:
        if p.is_infinity:
            return True
        v = vec_sub(p.coords, self.basepoint)
        v = _orthogonal_residual(v, self.basis)
        return vec_is_zero(v)

    def key(self) -> tuple:
        rows, _ = _linalg.rref([list(d) for d in self.basis], self.ambient)
        rows = [tuple(r) for r in rows[: self.dim]]
        # residual of the basepoint against the directions is the unique
        # point of the flat closest to the origin
        anchor = _orthogonal_residual(self.basepoint, self.basis)
        return (anchor, tuple(rows))


def _orthogonal_residual(v: Sequence[Scalar], basis: Sequence[Sequence[Scalar]]) -> Tuple:
    v = tuple(v)
    for d in basis:
        t = vec_dot(v, d) / vec_dot(d, d)
        v = vec_sub(v, vec_scale(t, d))
    return v


@dataclass(frozen=True)
class SubSphere:
    """A d-sphere presented as carrier flat (dimension d+1) cut by an ambient
    hypersphere whose center lies in the carrier; surface None means the whole
    extended space (the degenerate answer for unconstrained inputs)."""

    carrier: Flat
    surface: Optional[Hypersphere]

    @property
    def dim(self) -> int:
        if self.surface is None:
            return self.carrier.dim
        return self.carrier.dim - 1

    @property
    def ambient(self) -> int:
        return self.carrier.ambient

    def contains(self, p: Point) -> bool:
        if self.surface is None:
            return True
        if p.is_infinity:
            return is_zero(self.surface.c)
        return self.carrier.contains(p) and self.surface.contains(p)

    def key(self) -> tuple:
        if self.surface is None:
            return ("all", self.ambient)
        if is_zero(self.surface.c):
            cut = _flat_cut_by_plane(self.carrier, self.surface)
            return ("flat", cut.key())
        center = self.surface.center()
        return ("sphere", self.carrier.key(), center.coords, self.surface.radius_sq())


def _flat_cut_by_plane(carrier: Flat, plane: Hypersphere) -> Flat:
    """Intersection of a carrier flat with an extended hyperplane (c = 0)."""
    # Solve <b, base + sum t_i d_i> + a = 0 over the t coordinates.
    coeffs = [vec_dot(plane.b, d) for d in carrier.basis]
    const = vec_dot(plane.b, carrier.basepoint) + plane.a
    ns = _linalg.nullspace([coeffs], len(coeffs))
    # one particular solution
    idx = next((i for i, c in enumerate(coeffs) if not is_zero(c)), None)
    if idx is None:
        if not is_zero(const):
            raise GeometryError("plane does not meet the carrier flat")
        return carrier
    ts = [0] * len(coeffs)
    ts[idx] = -const / coeffs[idx]
    base = carrier.point_at(ts)
    dirs = []
    for vec in ns:
        w = carrier.point_at(vec).coords
        w = vec_sub(w, carrier.basepoint)
        dirs.append(w)
    pts = [base] + [Point.finite(vec_add(base.coords, d)) for d in dirs]
    return Flat.through(pts)


def _extended_flat_subsphere(hull: Flat, n: int) -> SubSphere:
    """SubSphere equal to hull ∪ {infinity}: carrier pads the hull by one
    deterministic direction, the surface is the hyperplane cutting it back."""
    residual = None
    for i in range(n):
        e = tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
        r = _orthogonal_residual(e, hull.basis)
        if not vec_is_zero(r):
            residual = r
            break
    if residual is None:
        raise GeometryError("hull flat already fills the space")
    carrier = Flat(hull.basepoint, hull.basis + (residual,))
    surface = Hypersphere.make(0, residual, -vec_dot(residual, hull.basepoint))
    return SubSphere(carrier, surface)


def smallest_sphere(points: Sequence[Point]) -> SubSphere:
    """The smallest-dimensional generalized sphere containing the points.

    k points span a sphere of dimension at most k-2: the circumsphere inside
    their affine hull when one exists, otherwise the extended hull flat. With
    infinity among the inputs the answer is always the extended hull.
    """
    points, k = _uniform(points)
    if len(points) < 2:
        raise GeometryError("need at least two points")
    _check_distinct(points, "smallest_sphere")
    n = points[0].dim
    finite = [p for p in points if not p.is_infinity]
    has_inf = len(finite) < len(points)
    hull = Flat.through(finite)
    if has_inf or hull.dim == 0:
        if hull.dim == n:
            return SubSphere(hull, None)
        return _extended_flat_subsphere(hull, n)
    g = [vec_dot(d, d) for d in hull.basis]
    tcoords = [hull.coords_of(p) for p in finite]
    rows = []
    one = promote(1, k) if k != "rational" else Fraction(1)
    for ts in tcoords:
        q = vec_dot([gi * t for gi, t in zip(g, ts)], ts)
        rows.append([q, *ts, one])
    ns = _linalg.nullspace(rows, hull.dim + 2)
    if not ns:
        if hull.dim == n:
            return SubSphere(hull, None)
        return _extended_flat_subsphere(hull, n)
    if len(ns) > 1:
        raise DegenerateSphereError("unexpected solution space in smallest_sphere")
    vec = ns[0]
    c, w, a = vec[0], vec[1:-1], vec[-1]
    if is_zero(c):
        raise DegenerateSphereError("hull-spanning points admit no interior flat")
    s = [-wi / (2 * gi * c) for wi, gi in zip(w, g)]
    center = hull.point_at(s)
    r_sq = vec_dot([gi * si for gi, si in zip(g, s)], s) - a / c
    if sign_of(r_sq) <= 0:
        raise DegenerateSphereError("circumsphere collapsed to a point")
    m = center.coords
    surface = Hypersphere.make(one, vec_scale(-2, m), vec_dot(m, m) - r_sq)
    return SubSphere(hull, surface)
