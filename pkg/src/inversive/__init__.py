"""Exact inversive geometry: Moebius maps, colorings, and witness searches."""

from .exactnum import (
    BackendMismatch,
    NormClass,
    Quartic2,
    SQRT2,
    THETA,
    norm_class_of,
    quartic_sign,
)
from .geom import (
    DegenerateConfigError,
    DegenerateSphereError,
    Flat,
    GeometryError,
    Hypersphere,
    Point,
    SideLabel,
    SubSphere,
    concyclic,
    cross_ratio,
    on_common_sphere,
    on_sphere,
    power_condition,
    second_intersection,
    separated,
    side,
    smallest_sphere,
    sphere_through,
)
from .moebius import HyperplaneReflection, MoebiusMap, SphereInversion, compose
from .colorings import (
    ColoredConfig,
    ColoringError,
    FlagEuclidean,
    FlagInversive,
    GenericPoints,
    PointListBackground,
    TwoLine,
    num_colors,
    sample_class,
)
from .chromatic import (
    CosetModel,
    PolychromaticWitness,
    SearchBudgetError,
    SeparationWitness,
    coset_closure_check,
    find_polychromatic,
    max_polychromatic,
    separating_circle_5pts,
    separating_sphere_bruteforce,
    two_line_coset_model,
    verify_flag,
    verify_generic,
    verify_two_line,
)
from .euclid import (
    GreatFlat,
    GreatIntersection,
    great_flat_through,
    great_intersection,
    max_colors_great,
    verify_flag_euclidean,
)
from .wcp import (
    CgpReport,
    FiniteImageMap,
    FivePointRefutation,
    WcpViolation,
    build_sharp_map,
    circular_general_position,
    five_point_refute,
    sample_circles,
    wcp_check,
)

__all__ = [
    "BackendMismatch",
    "CgpReport",
    "ColoredConfig",
    "ColoringError",
    "CosetModel",
    "DegenerateConfigError",
    "DegenerateSphereError",
    "FiniteImageMap",
    "FivePointRefutation",
    "FlagEuclidean",
    "FlagInversive",
    "Flat",
    "GenericPoints",
    "GeometryError",
    "GreatFlat",
    "GreatIntersection",
    "HyperplaneReflection",
    "Hypersphere",
    "MoebiusMap",
    "NormClass",
    "Point",
    "PointListBackground",
    "PolychromaticWitness",
    "Quartic2",
    "SQRT2",
    "SearchBudgetError",
    "SeparationWitness",
    "SideLabel",
    "SphereInversion",
    "SubSphere",
    "THETA",
    "TwoLine",
    "WcpViolation",
    "build_sharp_map",
    "circular_general_position",
    "compose",
    "concyclic",
    "coset_closure_check",
    "cross_ratio",
    "find_polychromatic",
    "five_point_refute",
    "great_flat_through",
    "great_intersection",
    "max_colors_great",
    "max_polychromatic",
    "norm_class_of",
    "num_colors",
    "on_common_sphere",
    "on_sphere",
    "power_condition",
    "quartic_sign",
    "sample_circles",
    "sample_class",
    "second_intersection",
    "separated",
    "separating_circle_5pts",
    "separating_sphere_bruteforce",
    "side",
    "smallest_sphere",
    "sphere_through",
    "two_line_coset_model",
    "verify_flag",
    "verify_flag_euclidean",
    "verify_generic",
    "verify_two_line",
    "wcp_check",
]
