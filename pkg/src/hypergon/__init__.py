"""Hyperbolic area and perimeter of geodesic polygons in the Poincare disk."""

__version__ = "0.1.0"

from .core import (
    ArcDescriptor,
    ArcKind,
    GeodesicSide,
    MobiusIsometry,
    arc_angle,
    disk_point,
    geodesic_circle,
    geodesic_parameterize,
    hyperbolic_distance,
    is_ideal,
    make_side,
    mobius_apply,
    side_coefficient,
)
from .polygon import (
    AngleSet,
    AreaReport,
    HyperbolicPolygon,
    OriginLocation,
    SideKind,
    area_classical,
    area_computational,
    area_geometric,
    area_perimeter_identity,
    area_report,
    area_winding,
    classify_side,
    interior_angles,
    is_simple,
    perimeter,
    turning_residual,
    validate,
)
