"""Moebius transformations of R^n_inf as factor lists of primitive maps.

A primitive is a sphere inversion (carrying center and squared radius) or a
hyperplane reflection (mirror {x : <normal, x> + offset = 0}). Both are
involutions, so the inverse of a composition is the reversed list. Factors
apply first to last.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .exactnum import common_kind, is_zero, promote, sign_of, sqrt_in_field
from .geom import (
    GeometryError,
    Hypersphere,
    Point,
    Scalar,
    _cdiv,
    _cmul,
    _uniform,
    vec_add,
    vec_dot,
    vec_scale,
    vec_sub,
)


class NormalizationError(GeometryError):
    """The requested normalization needs a similarity ratio outside the
    scalar field of the inputs."""


@dataclass(frozen=True)
class SphereInversion:
    center: Tuple[Scalar, ...]
    radius_sq: Scalar

    def __post_init__(self):
        k = common_kind([*self.center, self.radius_sq])
        object.__setattr__(self, "center", tuple(promote(x, k) for x in self.center))
        object.__setattr__(self, "radius_sq", promote(self.radius_sq, k))
        if sign_of(self.radius_sq) <= 0:
            raise GeometryError("inversion needs a positive squared radius")

    @property
    def dim(self) -> int:
        return len(self.center)

    def apply(self, p: Point) -> Point:
        if p.is_infinity:
            return Point.finite(self.center)
        w = vec_sub(p.coords, self.center)
        ww = vec_dot(w, w)
        if is_zero(ww):
            return Point.infinity(self.dim)
        return Point.finite(vec_add(self.center, vec_scale(self.radius_sq / ww, w)))

    def image_sphere(self, s: Hypersphere) -> Hypersphere:
        m, rho = self.center, self.radius_sq
        mm = vec_dot(m, m)
        k = s.c * mm + vec_dot(s.b, m) + s.a
        c2 = k
        b2 = vec_add(vec_scale(rho, s.b), vec_scale(2 * (s.c * rho - k), m))
        a2 = k * mm - 2 * s.c * rho * mm + s.c * rho * rho - rho * vec_dot(s.b, m)
        return Hypersphere.make(c2, b2, a2)


@dataclass(frozen=True)
class HyperplaneReflection:
    normal: Tuple[Scalar, ...]
    offset: Scalar

    def __post_init__(self):
        k = common_kind([*self.normal, self.offset])
        object.__setattr__(self, "normal", tuple(promote(x, k) for x in self.normal))
        object.__setattr__(self, "offset", promote(self.offset, k))
        if all(is_zero(x) for x in self.normal):
            raise GeometryError("reflection needs a nonzero normal")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def apply(self, p: Point) -> Point:
        if p.is_infinity:
            return p
        u, s = self.normal, self.offset
        lam = 2 * (vec_dot(u, p.coords) + s) / vec_dot(u, u)
        return Point.finite(vec_sub(p.coords, vec_scale(lam, u)))

    def image_sphere(self, s: Hypersphere) -> Hypersphere:
        u, off = self.normal, self.offset
        uu = vec_dot(u, u)
        bu = vec_dot(s.b, u)
        b2 = vec_add(s.b, vec_scale((4 * s.c * off - 2 * bu) / uu, u))
        a2 = s.a + (4 * s.c * off * off - 2 * off * bu) / uu
        return Hypersphere.make(s.c, b2, a2)


PrimitiveMap = Union[SphereInversion, HyperplaneReflection]


@dataclass(frozen=True)
class MoebiusMap:
    """A finite composition of primitives, applied first to last."""

    factors: Tuple[PrimitiveMap, ...]
    dim: int

    def __post_init__(self):
        for f in self.factors:
            if f.dim != self.dim:
                raise GeometryError("factor dimension mismatch")

    @classmethod
    def identity(cls, dim: int) -> "MoebiusMap":
        return cls((), dim)

    @classmethod
    def of(cls, *factors: PrimitiveMap) -> "MoebiusMap":
        if not factors:
            raise GeometryError("use identity(dim) for the empty composition")
        return cls(tuple(factors), factors[0].dim)

    def apply(self, p: Point) -> Point:
        if p.dim != self.dim:
            raise GeometryError("point dimension mismatch")
        for f in self.factors:
            p = f.apply(p)
        return p

    def image_sphere(self, s: Hypersphere) -> Hypersphere:
        if s.dim != self.dim:
            raise GeometryError("sphere dimension mismatch")
        for f in self.factors:
            s = f.image_sphere(s)
        return s

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(tuple(reversed(self.factors)), self.dim)


def compose(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    """The composition f after g: apply(compose(f, g), x) = f(g(x))."""
    if f.dim != g.dim:
        raise GeometryError("cannot compose maps of different dimensions")
    return MoebiusMap(g.factors + f.factors, f.dim)


def _zero_vec(n: int, k: str) -> Tuple:
    z = promote(0, k) if k != "rational" else Fraction(0)
    return tuple(z for _ in range(n))


def translation_factors(v: Sequence[Scalar]) -> List[PrimitiveMap]:
    """Translation by v as two parallel reflections (empty list for v = 0)."""
    v = tuple(v)
    if all(is_zero(x) for x in v):
        return []
    return [
        HyperplaneReflection(v, 0),
        HyperplaneReflection(v, -vec_dot(v, v) / 2),
    ]


def scaling_factors(s: Scalar, n: int) -> List[PrimitiveMap]:
    """Scaling about the origin by s > 0 as two concentric inversions."""
    if sign_of(s) <= 0:
        raise GeometryError("scaling ratio must be positive")
    if is_zero(s - 1):
        return []
    k = common_kind([s])
    origin = _zero_vec(n, k)
    return [SphereInversion(origin, promote(1, k)), SphereInversion(origin, s)]


def _reciprocal_factors(k: str) -> List[PrimitiveMap]:
    # z -> 1/z: unit inversion (z -> 1/conj(z)) then conjugation
    origin = _zero_vec(2, k)
    one = promote(1, k)
    zero = one - one
    return [
        SphereInversion(origin, one),
        HyperplaneReflection((zero, one), zero),
    ]


def rotation_factors(unit: Tuple[Scalar, Scalar]) -> List[PrimitiveMap]:
    """Planar rotation by the angle of a unit complex number, as two line
    reflections through the origin (the second mirror at half angle)."""
    u, v = unit
    if not is_zero(u * u + v * v - 1):
        raise GeometryError("rotation needs a unit complex number")
    if is_zero(v) and sign_of(u) > 0:
        return []
    k = common_kind([u, v])
    one = promote(1, k)
    zero = one - one
    x_axis = HyperplaneReflection((zero, one), zero)
    if is_zero(v) and sign_of(u) < 0:
        # rotation by pi
        return [x_axis, HyperplaneReflection((one, zero), zero)]
    # mirror along the half-angle direction (1+u, v); its normal is (-v, 1+u)
    return [x_axis, HyperplaneReflection((-v, one + u), zero)]


def complex_scaling_factors(nu: Tuple[Scalar, Scalar]) -> List[PrimitiveMap]:
    """Multiplication by the complex number nu, when |nu| lies in the field."""
    s2 = nu[0] * nu[0] + nu[1] * nu[1]
    if is_zero(s2):
        raise GeometryError("cannot scale by zero")
    s = sqrt_in_field(s2)
    if s is None:
        raise NormalizationError("similarity ratio |%r| is outside the scalar field" % (nu,))
    factors = scaling_factors(s, 2)
    factors += rotation_factors((nu[0] / s, nu[1] / s))
    return factors


def _send_zero_infinity(p: Point, q: Point) -> List[PrimitiveMap]:
    factors: List[PrimitiveMap] = []
    if q.is_infinity:
        if not p.is_infinity and not all(is_zero(x) for x in p.coords):
            factors += translation_factors(vec_scale(-1, p.coords))
    else:
        k = common_kind(q.coords)
        inv = SphereInversion(q.coords, promote(1, k))
        factors.append(inv)
        p_img = inv.apply(p)
        if not all(is_zero(x) for x in p_img.coords):
            factors += translation_factors(vec_scale(-1, p_img.coords))
    return factors


def normalize(p: Point, q: Point, r: Optional[Point] = None) -> MoebiusMap:
    """The Moebius map sending p to the origin and q to infinity; with r it
    also sends r to (1, 0, ..., 0).

    In the plane the three-point form is the complex map
    z -> ((z - p)(r - q)) / ((z - q)(r - p)) expressed in primitives; in
    higher dimensions the residual similarity is a Householder reflection and
    a scaling, which must stay inside the scalar field or the call raises
    NormalizationError.
    """
    pts = [p, q] + ([r] if r is not None else [])
    pts, _ = _uniform(pts)
    if r is not None:
        p, q, r = pts
    else:
        p, q = pts
    n = p.dim
    if len({pt for pt in pts}) != len(pts):
        raise GeometryError("normalize needs distinct points")
    if r is None:
        factors = _send_zero_infinity(p, q)
        result = MoebiusMap(tuple(factors), n)
    elif n == 2:
        result = MoebiusMap(tuple(_three_point_plane_factors(p, q, r)), 2)
    else:
        factors = _send_zero_infinity(p, q)
        partial = MoebiusMap(tuple(factors), n)
        r_img = partial.apply(r)
        if r_img.is_infinity:
            raise GeometryError("normalize needs distinct points")
        ll = vec_dot(r_img.coords, r_img.coords)
        length = sqrt_in_field(ll)
        if length is None:
            raise NormalizationError("length of the image of r is outside the scalar field")
        k = common_kind([length, *r_img.coords])
        e1 = (promote(length, k),) + _zero_vec(n - 1, k)
        householder = vec_sub(r_img.coords, e1)
        if not all(is_zero(x) for x in householder):
            factors.append(HyperplaneReflection(householder, 0))
        factors += scaling_factors(1 / length, n)
        result = MoebiusMap(tuple(factors), n)
    _assert_normalized(result, p, q, r)
    return result


def _three_point_plane_factors(p: Point, q: Point, r: Point) -> List[PrimitiveMap]:
    k = "rational"
    for pt in (p, q, r):
        if not pt.is_infinity:
            k = common_kind([promote(0, k), *pt.coords])
    one = promote(1, k)
    factors: List[PrimitiveMap] = []
    if q.is_infinity:
        # z -> (z - p) / (r - p)
        factors += translation_factors(vec_scale(-1, p.coords))
        nu = _cdiv((one, one - one), vec_sub(r.coords, p.coords))
        factors += complex_scaling_factors(nu)
        return factors
    factors += translation_factors(vec_scale(-1, q.coords))
    factors += _reciprocal_factors(k)
    if p.is_infinity:
        # z -> (r - q) / (z - q)
        factors += complex_scaling_factors(vec_sub(r.coords, q.coords))
        return factors
    if r.is_infinity:
        # z -> 1 + (q - p) / (z - q)
        factors += complex_scaling_factors(vec_sub(q.coords, p.coords))
        factors += translation_factors((one, one - one))
        return factors
    mu = _cdiv(vec_sub(r.coords, q.coords), vec_sub(r.coords, p.coords))
    nu = _cmul(mu, vec_sub(q.coords, p.coords))
    factors += complex_scaling_factors(nu)
    factors += translation_factors(mu)
    return factors


def _assert_normalized(m: MoebiusMap, p: Point, q: Point, r: Optional[Point]) -> None:
    img_p, img_q = m.apply(p), m.apply(q)
    ok = (not img_p.is_infinity and all(is_zero(x) for x in img_p.coords)
          and img_q.is_infinity)
    if ok and r is not None:
        img_r = m.apply(r)
        if img_r.is_infinity:
            ok = False
        else:
            first = img_r.coords[0]
            ok = is_zero(first - 1) and all(is_zero(x) for x in img_r.coords[1:])
    if not ok:
        raise GeometryError("normalization postcondition failed")
