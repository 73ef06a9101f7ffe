"""Tests for primitive factor maps, composition, and normalization."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inversive.exactnum import Quartic2, THETA
from inversive.geom import (
    CR_INFINITY,
    GeometryError,
    Hypersphere,
    Point,
    cross_ratio,
    on_sphere,
    sphere_through,
)
from inversive.moebius import (
    HyperplaneReflection,
    MoebiusMap,
    NormalizationError,
    SphereInversion,
    compose,
    normalize,
    rotation_factors,
    scaling_factors,
    translation_factors,
)

coords = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def rand_point(rng, n=2):
    return Point.finite(tuple(F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)))


def rand_map(rng, n=2, max_factors=4):
    factors = []
    for _ in range(rng.randint(1, max_factors)):
        if rng.random() < 0.5:
            center = tuple(F(rng.randint(-3, 3)) for _ in range(n))
            factors.append(SphereInversion(center, F(rng.randint(1, 5))))
        else:
            normal = tuple(F(rng.randint(-3, 3)) for _ in range(n))
            if all(x == 0 for x in normal):
                normal = (F(1),) + (F(0),) * (n - 1)
            factors.append(HyperplaneReflection(normal, F(rng.randint(-3, 3))))
    return MoebiusMap(tuple(factors), n)


class TestPrimitives:
    def test_unit_inversion_points(self):
        inv = SphereInversion((F(0), F(0)), F(1))
        assert inv.apply(Point.finite((2, 0))) == Point.finite((F(1, 2), 0))
        assert inv.apply(Point.finite((0, 0))) == Point.infinity(2)
        assert inv.apply(Point.infinity(2)) == Point.finite((0, 0))
        # points of the unit circle stay put
        assert inv.apply(Point.finite((F(3, 5), F(4, 5)))) == Point.finite((F(3, 5), F(4, 5)))

    def test_reflection_points(self):
        refl = HyperplaneReflection((F(0), F(1)), F(0))
        assert refl.apply(Point.finite((1, 2))) == Point.finite((1, -2))
        assert refl.apply(Point.finite((5, 0))) == Point.finite((5, 0))
        assert refl.apply(Point.infinity(2)) == Point.infinity(2)

    def test_offset_reflection(self):
        # mirror {x_1 = 3}, written <(1,0), x> - 3 = 0
        refl = HyperplaneReflection((F(1), F(0)), F(-3))
        assert refl.apply(Point.finite((0, 7))) == Point.finite((6, 7))

    def test_invalid_primitives(self):
        with pytest.raises(GeometryError):
            SphereInversion((F(0), F(0)), F(0))
        with pytest.raises(GeometryError):
            SphereInversion((F(0), F(0)), F(-1))
        with pytest.raises(GeometryError):
            HyperplaneReflection((F(0), F(0)), F(1))

    @given(st.tuples(coords, coords), st.tuples(coords, coords), coords)
    def test_involution(self, pt, center, rho):
        if rho <= 0:
            rho += 9
        p = Point.finite(pt)
        inv = SphereInversion(center, rho)
        assert inv.apply(inv.apply(p)) == p
        refl = HyperplaneReflection((F(1), F(2)), F(-1))
        assert refl.apply(refl.apply(p)) == p


class TestImageSphere:
    def test_line_to_circle(self):
        inv = SphereInversion((F(0), F(0)), F(1))
        line = Hypersphere.make(0, (1, 0), -2)
        img = inv.image_sphere(line)
        assert img.center() == Point.finite((F(1, 4), 0))
        assert img.radius_sq() == F(1, 16)

    def test_unit_circle_fixed(self):
        inv = SphereInversion((F(0), F(0)), F(1))
        unit = Hypersphere.make(1, (0, 0), -1)
        assert inv.image_sphere(unit) == unit

    def test_circle_through_center_to_line(self):
        inv = SphereInversion((F(0), F(0)), F(1))
        circle = sphere_through([Point.finite((0, 0)), Point.finite((2, 0)), Point.finite((1, 1))])
        img = inv.image_sphere(circle)
        assert img.is_flat
        assert on_sphere(Point.finite((F(1, 2), 0)), img)

    def test_reflection_image(self):
        refl = HyperplaneReflection((F(0), F(1)), F(0))
        circle = Hypersphere.make(1, (-2, -4), 1)
        img = refl.image_sphere(circle)
        assert img == Hypersphere.make(1, (-2, 4), 1)

    def test_image_matches_point_images(self):
        rng = random.Random(7)
        for _ in range(40):
            pts = [rand_point(rng) for _ in range(3)]
            try:
                s = sphere_through(pts)
            except GeometryError:
                continue
            m = rand_map(rng)
            images = [m.apply(p) for p in pts]
            if len({images[0], images[1], images[2]}) < 3:
                continue
            try:
                expected = sphere_through(images)
            except GeometryError:
                continue
            assert m.image_sphere(s) == expected

    def test_incidence_preserved_3d(self):
        rng = random.Random(11)
        for _ in range(10):
            pts = [rand_point(rng, 3) for _ in range(4)]
            try:
                s = sphere_through(pts)
            except GeometryError:
                continue
            m = rand_map(rng, n=3)
            img = m.image_sphere(s)
            for p in pts:
                assert on_sphere(m.apply(p), img)


class TestCompose:
    def test_compose_order(self):
        inv = MoebiusMap.of(SphereInversion((F(0), F(0)), F(1)))
        shift = MoebiusMap(tuple(translation_factors((F(1), F(0)))), 2)
        # compose(shift, inv) applies inv first
        p = Point.finite((2, 0))
        assert compose(shift, inv).apply(p) == Point.finite((F(3, 2), 0))
        assert compose(inv, shift).apply(p) == Point.finite((F(1, 3), 0))

    def test_inverse_roundtrip(self):
        rng = random.Random(3)
        for _ in range(30):
            m = rand_map(rng)
            both = compose(m.inverse(), m)
            p = rand_point(rng)
            assert both.apply(p) == p

    def test_identity(self):
        ident = MoebiusMap.identity(2)
        p = Point.finite((3, 5))
        assert ident.apply(p) == p
        assert ident.apply(Point.infinity(2)) == Point.infinity(2)

    def test_dim_mismatch(self):
        with pytest.raises(GeometryError):
            compose(MoebiusMap.identity(2), MoebiusMap.identity(3))
        with pytest.raises(GeometryError):
            MoebiusMap.identity(2).apply(Point.finite((1, 2, 3)))


class TestBuildingBlocks:
    def test_translation(self):
        m = MoebiusMap(tuple(translation_factors((F(3), F(-1)))), 2)
        assert m.apply(Point.finite((0, 0))) == Point.finite((3, -1))
        assert m.apply(Point.infinity(2)) == Point.infinity(2)
        assert translation_factors((F(0), F(0))) == []

    def test_scaling(self):
        m = MoebiusMap(tuple(scaling_factors(F(3, 2), 2)), 2)
        assert m.apply(Point.finite((2, -4))) == Point.finite((3, -6))
        assert scaling_factors(F(1), 2) == []
        with pytest.raises(GeometryError):
            scaling_factors(F(-2), 2)

    def test_rotation(self):
        # rotation by the angle of (3/5, 4/5)
        m = MoebiusMap(tuple(rotation_factors((F(3, 5), F(4, 5)))), 2)
        assert m.apply(Point.finite((1, 0))) == Point.finite((F(3, 5), F(4, 5)))
        assert m.apply(Point.finite((0, 1))) == Point.finite((F(-4, 5), F(3, 5)))
        half_turn = MoebiusMap(tuple(rotation_factors((F(-1), F(0)))), 2)
        assert half_turn.apply(Point.finite((2, 5))) == Point.finite((-2, -5))
        assert rotation_factors((F(1), F(0))) == []
        with pytest.raises(GeometryError):
            rotation_factors((F(1), F(1)))


class TestNormalize:
    def test_three_point_plane(self):
        m = normalize(Point.finite((0, 1)), Point.finite((0, -1)), Point.finite((1, 0)))
        assert m.apply(Point.finite((0, 0))) == Point.finite((0, -1))
        assert m.apply(Point.finite((0, 1))) == Point.finite((0, 0))
        assert m.apply(Point.finite((0, -1))) == Point.infinity(2)
        assert m.apply(Point.finite((1, 0))) == Point.finite((1, 0))

    def test_two_point_forms(self):
        cases = [
            (Point.finite((3, 4)), Point.finite((1, 1))),
            (Point.finite((3, 4)), Point.infinity(2)),
            (Point.infinity(2), Point.finite((1, 1))),
            (Point.finite((0, 0)), Point.infinity(2)),
        ]
        for p, q in cases:
            m = normalize(p, q)
            assert m.apply(p) == Point.finite((0, 0))
            assert m.apply(q) == Point.infinity(2)

    def test_three_point_infinity_cases(self):
        e1 = Point.finite((1, 0))
        zero = Point.finite((0, 0))
        for p, q, r in [
            (Point.infinity(2), Point.finite((2, 1)), Point.finite((5, 5))),
            (Point.finite((2, 1)), Point.infinity(2), Point.finite((5, 5))),
            (Point.finite((2, 1)), Point.finite((5, 5)), Point.infinity(2)),
        ]:
            m = normalize(p, q, r)
            assert m.apply(p) == zero
            assert m.apply(q) == Point.infinity(2)
            assert m.apply(r) == e1

    def test_duplicate_points_rejected(self):
        p = Point.finite((1, 2))
        with pytest.raises(GeometryError):
            normalize(p, p)
        with pytest.raises(GeometryError):
            normalize(p, Point.finite((0, 0)), p)

    def test_irrational_ratio_rejected(self):
        # |r - p| = sqrt(2) is outside the rationals
        with pytest.raises(NormalizationError):
            normalize(Point.finite((0, 0)), Point.infinity(2), Point.finite((1, 1)))

    def test_quartic_field_admits_sqrt2(self):
        z = Quartic2(0)
        m = normalize(Point.finite((z, z)), Point.infinity(2), Point.finite((z + 1, z + 1)))
        img = m.apply(Point.finite((z + 1, z + 1)))
        assert img == Point.finite((Quartic2(1), Quartic2(0)))

    def test_quartic_translation(self):
        p = Point.finite((THETA, THETA ** 3))
        m = normalize(p, Point.infinity(2))
        assert m.apply(p) == Point.finite((Quartic2(0), Quartic2(0)))

    def test_householder_3d(self):
        m = normalize(Point.finite((0, 0, 0)), Point.infinity(3), Point.finite((3, 4, 0)))
        assert m.apply(Point.finite((3, 4, 0))) == Point.finite((1, 0, 0))
        with pytest.raises(NormalizationError):
            normalize(Point.finite((0, 0, 0)), Point.infinity(3), Point.finite((1, 1, 0)))

    @given(st.tuples(coords, coords), st.tuples(coords, coords), st.tuples(coords, coords))
    @settings(deadline=None)
    def test_random_triples(self, a, b, c):
        pts = {a, b, c}
        if len(pts) < 3:
            return
        p, q, r = Point.finite(a), Point.finite(b), Point.finite(c)
        try:
            m = normalize(p, q, r)
        except NormalizationError:
            return
        assert m.apply(p) == Point.finite((0, 0))
        assert m.apply(q) == Point.infinity(2)
        assert m.apply(r) == Point.finite((1, 0))


class TestCrossRatioInvariance:
    def test_parity_aware_invariance(self):
        rng = random.Random(19)
        checked = 0
        while checked < 25:
            pts = [rand_point(rng) for _ in range(4)]
            if len(set(pts)) < 4:
                continue
            cr = cross_ratio(*pts)
            m = rand_map(rng)
            images = [m.apply(p) for p in pts]
            if len(set(images)) < 4:
                continue
            cr2 = cross_ratio(*images)
            if cr is CR_INFINITY or cr2 is CR_INFINITY:
                assert cr is cr2
            elif len(m.factors) % 2 == 0:
                assert cr2 == cr
            else:
                # odd factor counts reverse orientation and conjugate
                assert cr2 == (cr[0], -cr[1])
            checked += 1
