"""JSON codecs for the library's value types.

Scalars travel as exact text: a rational is the string "p/q" (or "p"), an
element of the quartic field is an array of four rational strings listing
the coefficients of 1, theta, theta^2, theta^3, and a float is a plain JSON
number.  A bare JSON integer decodes as an exact rational rather than a
float, so hand-written coordinate files stay in the exact backends.

Structures mirror the in-memory types field by field; every decoder
revalidates through the ordinary constructors, so a tampered witness file
fails to load instead of producing a bogus verdict.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .colorings import (
    ColoredConfig,
    FlagEuclidean,
    FlagInversive,
    GenericPoints,
    PointListBackground,
    ProceduralColoring,
    TwoLine,
)
from .chromatic import PolychromaticWitness, SeparationWitness
from .euclid import GreatFlat, GreatIntersection
from .exactnum import Quartic2
from .geom import Flat, Hypersphere, Point, Scalar, SubSphere
from .moebius import HyperplaneReflection, MoebiusMap, SphereInversion
from .wcp import CgpReport, FiniteImageMap, FivePointRefutation, WcpViolation

__all__ = [
    "FormatError",
    "canonical_json",
    "decode_coloring",
    "decode_config",
    "decode_great_flat",
    "decode_map",
    "decode_moebius",
    "decode_point",
    "decode_point_list",
    "decode_polychromatic_witness",
    "decode_scalar",
    "decode_separation_witness",
    "decode_sphere",
    "encode_cgp_report",
    "encode_coloring",
    "encode_config",
    "encode_great_flat",
    "encode_great_intersection",
    "encode_map",
    "encode_moebius",
    "encode_point",
    "encode_polychromatic_witness",
    "encode_refutation",
    "encode_scalar",
    "encode_separation_witness",
    "encode_sphere",
    "encode_violation",
]


class FormatError(ValueError):
    """Raised when a JSON document does not match the expected shape."""


def canonical_json(payload: Any) -> str:
    """Serialize a payload with sorted keys and a trailing newline, so that
    identical data always yields byte-identical text."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# scalars


def encode_scalar(x: Scalar) -> Any:
    if isinstance(x, bool):
        raise FormatError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, Quartic2):
        return [str(c) for c in x.coeffs]
    if isinstance(x, float):
        return x
    raise FormatError("cannot encode scalar of type %s" % type(x).__name__)


def decode_scalar(v: Any) -> Scalar:
    if isinstance(v, bool):
        raise FormatError("booleans are not scalars")
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError("bad rational %r" % v) from e
    if isinstance(v, list):
        if len(v) != 4:
            raise FormatError("quartic scalars need exactly four coefficients")
        coeffs = [decode_scalar(c) for c in v]
        if not all(isinstance(c, Fraction) for c in coeffs):
            raise FormatError("quartic coefficients must be rational")
        return Quartic2(*coeffs)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    raise FormatError("cannot decode scalar from %r" % (v,))


def _decode_vector(v: Any, what: str = "vector") -> Tuple[Scalar, ...]:
    if not isinstance(v, list) or not v:
        raise FormatError("%s must be a nonempty array" % what)
    return tuple(decode_scalar(x) for x in v)


# ---------------------------------------------------------------------------
# points and spheres


def encode_point(p: Point) -> Dict[str, Any]:
    if p.is_infinity:
        return {"infinity": True}
    return {"coords": [encode_scalar(x) for x in p.coords]}


def decode_point(obj: Any, n: Optional[int] = None) -> Point:
    if not isinstance(obj, dict):
        raise FormatError("point must be an object")
    if obj.get("infinity"):
        if n is None:
            raise FormatError("point at infinity needs an ambient dimension")
        return Point.infinity(n)
    if "coords" not in obj:
        raise FormatError("point needs \"coords\" or \"infinity\"")
    coords = _decode_vector(obj["coords"], "coords")
    if n is not None and len(coords) != n:
        raise FormatError("expected %d coordinates, got %d" % (n, len(coords)))
    return Point.finite(coords)


def encode_hypersphere(s: Hypersphere) -> Dict[str, Any]:
    return {
        "c": encode_scalar(s.c),
        "b": [encode_scalar(x) for x in s.b],
        "a": encode_scalar(s.a),
    }


def decode_hypersphere(obj: Any) -> Hypersphere:
    if not isinstance(obj, dict) or not {"c", "b", "a"} <= set(obj):
        raise FormatError("hypersphere needs \"c\", \"b\", \"a\"")
    return Hypersphere.make(decode_scalar(obj["c"]),
                            _decode_vector(obj["b"], "b"),
                            decode_scalar(obj["a"]))


def _encode_flat(f: Flat) -> Dict[str, Any]:
    return {
        "basepoint": [encode_scalar(x) for x in f.basepoint],
        "basis": [[encode_scalar(x) for x in row] for row in f.basis],
    }


def _decode_flat(obj: Any) -> Flat:
    if not isinstance(obj, dict) or "basepoint" not in obj:
        raise FormatError("flat needs \"basepoint\" and \"basis\"")
    base = _decode_vector(obj["basepoint"], "basepoint")
    rows = obj.get("basis", [])
    if not isinstance(rows, list):
        raise FormatError("basis must be an array of vectors")
    # Rebuild through points so a hand-edited, non-orthogonal basis is
    # re-orthogonalized instead of silently breaking membership tests.
    pts = [Point.finite(base)]
    for row in rows:
        v = _decode_vector(row, "basis vector")
        pts.append(Point.finite(tuple(b + x for b, x in zip(base, v))))
    return Flat.through(pts)


def encode_sphere(s: Union[Hypersphere, SubSphere]) -> Dict[str, Any]:
    """Encode either a full-dimensional hypersphere or a lower-dimensional
    subsphere (carrier flat plus cutting surface)."""
    if isinstance(s, Hypersphere):
        return encode_hypersphere(s)
    if isinstance(s, SubSphere):
        out: Dict[str, Any] = {"carrier": _encode_flat(s.carrier)}
        out["surface"] = None if s.surface is None else encode_hypersphere(s.surface)
        return out
    raise FormatError("cannot encode sphere of type %s" % type(s).__name__)


def decode_sphere(obj: Any) -> Union[Hypersphere, SubSphere]:
    if not isinstance(obj, dict):
        raise FormatError("sphere must be an object")
    if "carrier" in obj:
        surface = obj.get("surface")
        return SubSphere(_decode_flat(obj["carrier"]),
                         None if surface is None else decode_hypersphere(surface))
    return decode_hypersphere(obj)


def _sphere_ambient(s: Union[Hypersphere, SubSphere]) -> int:
    return len(s.b) if isinstance(s, Hypersphere) else s.ambient


# ---------------------------------------------------------------------------
# Moebius maps


def encode_moebius(m: MoebiusMap) -> Dict[str, Any]:
    factors: List[Dict[str, Any]] = []
    for f in m.factors:
        if isinstance(f, SphereInversion):
            factors.append({"inversion": {
                "center": [encode_scalar(x) for x in f.center],
                "r2": encode_scalar(f.radius_sq),
            }})
        else:
            factors.append({"reflection": {
                "normal": [encode_scalar(x) for x in f.normal],
                "offset": encode_scalar(f.offset),
            }})
    return {"dim": m.dim, "factors": factors}


def decode_moebius(obj: Any) -> MoebiusMap:
    if not isinstance(obj, dict) or "factors" not in obj:
        raise FormatError("map needs a \"factors\" array")
    factors = []
    for entry in obj["factors"]:
        if not isinstance(entry, dict) or len(entry) != 1:
            raise FormatError("each factor is one inversion or reflection")
        if "inversion" in entry:
            body = entry["inversion"]
            factors.append(SphereInversion(_decode_vector(body["center"], "center"),
                                           decode_scalar(body["r2"])))
        elif "reflection" in entry:
            body = entry["reflection"]
            factors.append(HyperplaneReflection(_decode_vector(body["normal"], "normal"),
                                                decode_scalar(body["offset"])))
        else:
            raise FormatError("unknown factor kind %r" % list(entry))
    dim = obj.get("dim", factors[0].dim if factors else None)
    if dim is None:
        raise FormatError("an empty map needs an explicit \"dim\"")
    return MoebiusMap(tuple(factors), dim)


# ---------------------------------------------------------------------------
# colored configurations and point lists


def encode_config(cfg: ColoredConfig) -> Dict[str, Any]:
    pts = []
    for p, c in cfg.items:
        entry = encode_point(p)
        entry["color"] = c
        pts.append(entry)
    return {"n": cfg.n, "k": cfg.k, "points": pts}


def decode_config(obj: Any) -> ColoredConfig:
    if not isinstance(obj, dict) or not {"n", "k", "points"} <= set(obj):
        raise FormatError("configuration needs \"n\", \"k\", \"points\"")
    n, k = obj["n"], obj["k"]
    if not isinstance(n, int) or not isinstance(k, int):
        raise FormatError("\"n\" and \"k\" must be integers")
    items = []
    for entry in obj["points"]:
        if not isinstance(entry, dict) or "color" not in entry:
            raise FormatError("each configuration point needs a \"color\"")
        items.append((decode_point(entry, n), entry["color"]))
    return ColoredConfig(n, k, tuple(items))


def decode_point_list(obj: Any) -> Tuple[int, List[Point]]:
    """Decode {"n": ..., "points": [...]} into (n, points)."""
    if not isinstance(obj, dict) or not {"n", "points"} <= set(obj):
        raise FormatError("point list needs \"n\" and \"points\"")
    n = obj["n"]
    if not isinstance(n, int):
        raise FormatError("\"n\" must be an integer")
    return n, [decode_point(entry, n) for entry in obj["points"]]


# ---------------------------------------------------------------------------
# coloring descriptors


def encode_coloring(col: ProceduralColoring) -> Dict[str, Any]:
    if isinstance(col, FlagInversive):
        return {"kind": "flag", "n": col.n}
    if isinstance(col, FlagEuclidean):
        return {"kind": "flag-euclidean", "n": col.n}
    if isinstance(col, TwoLine):
        return {"kind": "two-line", "extended": col.extended}
    if isinstance(col, GenericPoints):
        return {"kind": "generic", "n": col.n, "k": col.k,
                "points": [encode_point(p) for p in col.points]}
    if isinstance(col, PointListBackground):
        pts = []
        for p, c in zip(col.points, col.colors):
            entry = encode_point(p)
            entry["color"] = c
            pts.append(entry)
        return {"kind": "point-list", "n": col.n,
                "background": col.background, "points": pts}
    raise FormatError("cannot encode coloring of type %s" % type(col).__name__)


def decode_coloring(obj: Any) -> ProceduralColoring:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("coloring descriptor needs a \"kind\"")
    kind = obj["kind"]
    if kind == "flag":
        return FlagInversive(_require_int(obj, "n"))
    if kind == "flag-euclidean":
        return FlagEuclidean(_require_int(obj, "n"))
    if kind == "two-line":
        return TwoLine(bool(obj.get("extended", False)))
    if kind == "two-line-extended":
        return TwoLine(True)
    if kind == "generic":
        n, k = _require_int(obj, "n"), _require_int(obj, "k")
        if "points" in obj:
            pts = tuple(decode_point(e, n) for e in obj["points"])
            return GenericPoints(n, k, pts)
        return GenericPoints.random(n, k, obj.get("seed", 0))
    if kind == "point-list":
        n = _require_int(obj, "n")
        pts, cols = [], []
        for entry in obj.get("points", []):
            if "color" not in entry:
                raise FormatError("each listed point needs a \"color\"")
            pts.append(decode_point(entry, n))
            cols.append(entry["color"])
        return PointListBackground(n, tuple(pts), tuple(cols),
                                   _require_int(obj, "background"))
    raise FormatError("unknown coloring kind %r" % kind)


def _require_int(obj: Mapping, key: str) -> int:
    if key not in obj or isinstance(obj[key], bool) or not isinstance(obj[key], int):
        raise FormatError("descriptor needs integer %r" % key)
    return obj[key]


# ---------------------------------------------------------------------------
# witnesses and reports


def _encode_colored_pair(p: Point, c: int) -> Dict[str, Any]:
    return {"point": encode_point(p), "color": c}


def encode_polychromatic_witness(w: PolychromaticWitness) -> Dict[str, Any]:
    return {
        "sphere": encode_sphere(w.sphere),
        "points": [_encode_colored_pair(p, c) for p, c in w.on_points],
        "colors": sorted(w.color_set),
    }


def decode_polychromatic_witness(obj: Any) -> PolychromaticWitness:
    if not isinstance(obj, dict) or not {"sphere", "points", "colors"} <= set(obj):
        raise FormatError("witness needs \"sphere\", \"points\", \"colors\"")
    sphere = decode_sphere(obj["sphere"])
    n = _sphere_ambient(sphere)
    on = tuple((decode_point(e["point"], n), e["color"]) for e in obj["points"])
    return PolychromaticWitness(sphere, on, frozenset(obj["colors"]))


def encode_separation_witness(w: SeparationWitness) -> Dict[str, Any]:
    return {
        "sphere": encode_sphere(w.sphere),
        "defining": [_encode_colored_pair(p, c) for p, c in w.defining],
        "separated": [_encode_colored_pair(p, c) for p, c in w.separated_pair],
    }


def decode_separation_witness(obj: Any) -> SeparationWitness:
    if not isinstance(obj, dict) or not {"sphere", "defining", "separated"} <= set(obj):
        raise FormatError("witness needs \"sphere\", \"defining\", \"separated\"")
    sphere = decode_sphere(obj["sphere"])
    if not isinstance(sphere, Hypersphere):
        raise FormatError("separation witnesses use full hyperspheres")
    n = _sphere_ambient(sphere)
    defining = tuple((decode_point(e["point"], n), e["color"])
                     for e in obj["defining"])
    sep = [(decode_point(e["point"], n), e["color"]) for e in obj["separated"]]
    if len(sep) != 2:
        raise FormatError("exactly two separated points expected")
    return SeparationWitness(sphere, defining, (sep[0], sep[1]))


def encode_great_flat(f: GreatFlat) -> Dict[str, Any]:
    return {"basis": [[encode_scalar(x) for x in row] for row in f.basis]}


def decode_great_flat(obj: Any) -> GreatFlat:
    if not isinstance(obj, dict) or "basis" not in obj:
        raise FormatError("great flat needs a \"basis\"")
    rows = [_decode_vector(row, "basis vector") for row in obj["basis"]]
    if not rows:
        raise FormatError("basis must be nonempty")
    return GreatFlat.span(rows)


def encode_great_intersection(g: GreatIntersection) -> Dict[str, Any]:
    return {
        "direction": [encode_scalar(x) for x in g.direction],
        "points": [encode_point(p) for p in g.points],
        "exact": g.exact,
    }


def encode_map(t: FiniteImageMap) -> Dict[str, Any]:
    return {
        "coloring": encode_coloring(t.coloring),
        "image": [encode_point(p) for p in t.image],
        "table": {str(c): i for c, i in sorted(t.table.items())},
    }


def decode_map(obj: Any) -> FiniteImageMap:
    if not isinstance(obj, dict) or not {"coloring", "image", "table"} <= set(obj):
        raise FormatError("map needs \"coloring\", \"image\", \"table\"")
    coloring = decode_coloring(obj["coloring"])
    dim = _image_dim(obj)
    image = tuple(decode_point(e, dim) for e in obj["image"])
    table = {}
    for key, val in obj["table"].items():
        try:
            table[int(key)] = val
        except ValueError as e:
            raise FormatError("table keys must be integer colors") from e
    return FiniteImageMap(coloring, image, table)


def _image_dim(obj: Mapping) -> Optional[int]:
    for e in obj.get("image", []):
        if isinstance(e, dict) and "coords" in e:
            return len(e["coords"])
    return None


def encode_violation(v: WcpViolation) -> Dict[str, Any]:
    return {
        "sample_index": v.sample_index,
        "circle": encode_sphere(v.circle),
        "domain_points": [encode_point(p) for p in v.domain_points],
        "images": [encode_point(p) for p in v.images],
    }


def encode_refutation(r: FivePointRefutation) -> Dict[str, Any]:
    return {
        "witness": encode_polychromatic_witness(r.witness),
        "domain_points": [encode_point(p) for p in r.domain_points],
        "images": [encode_point(p) for p in r.images],
    }


def encode_cgp_report(r: CgpReport) -> Dict[str, Any]:
    return {
        "verdict": r.verdict,
        "circle": None if r.circle is None else encode_sphere(r.circle),
        "on_circle": [encode_point(p) for p in r.on_circle],
    }
