"""Geodesic polygons: validation, side classification, area formulas and perimeter.

All area formulas take a validated :class:`HyperbolicPolygon`.  Sums go
through :func:`math.fsum`, so cyclically rotating the vertex list or
reversing it changes the results exactly (sign only, for reversal).
"""

from __future__ import annotations

import cmath
import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import core
from .core import GeodesicSide, is_ideal, make_side, side_coefficient
from .errors import (
    BranchViolation,
    HypergonError,
    IdealVertex,
    NegativeOrientation,
    OriginLocationMismatch,
    OriginOnBoundary,
    SelfIntersecting,
    TooFewVertices,
    ZeroVertex,
)

ORIGIN_BOUNDARY_EPS = 1e-9
BRANCH_EPS = 1e-12


@dataclass(frozen=True)
class HyperbolicPolygon:
    vertices: tuple
    sides: tuple
    reoriented: bool = False

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def has_ideal_vertex(self) -> bool:
        return any(is_ideal(z) for z in self.vertices)

    def transformed(self, m: core.MobiusIsometry) -> "HyperbolicPolygon":
        """Image under an isometry; orientation is preserved so no re-check is needed."""
        return _build([core.mobius_apply(m, z) for z in self.vertices], self.reoriented)

    def reversed(self) -> "HyperbolicPolygon":
        """The same vertex cycle traversed backwards (negatively oriented, unchecked)."""
        return _build(self.vertices[::-1], self.reoriented)

    def rotated(self, k: int) -> "HyperbolicPolygon":
        k %= self.n
        return _build(self.vertices[k:] + self.vertices[:k], self.reoriented)


def _build(vertices, reoriented) -> HyperbolicPolygon:
    vs = tuple(vertices)
    sides = tuple(make_side(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs)))
    return HyperbolicPolygon(vs, sides, reoriented)


def shoelace(vertices: Sequence[complex]) -> float:
    """Euclidean signed area of the straight-line polygon through ``vertices``."""
    n = len(vertices)
    return 0.5 * math.fsum(
        (vertices[k].conjugate() * vertices[(k + 1) % n]).imag for k in range(n)
    )


def validate(
    vertices,
    *,
    auto_orient: bool = False,
    check_orientation: bool = True,
    allow_ideal: bool = True,
) -> HyperbolicPolygon:
    """Build a polygon from a vertex list, checking the preconditions of the area formulas.

    Parameters
    ----------
    vertices : iterable of complex
        Vertex cycle; the closing side back to the first vertex is implied.
    auto_orient : bool
        Reverse a clockwise cycle instead of raising. The reversal is
        recorded in ``HyperbolicPolygon.reoriented``.
    check_orientation : bool
        When False no orientation test is made at all; used for the
        unrestricted configuration space of the isoperimetric search.
    allow_ideal : bool
        Reject vertices on the unit circle when False.

    Raises
    ------
    TooFewVertices, OutsideDisk, DegenerateSide, NegativeOrientation, IdealVertex
    """
    vs = [core.disk_point(z) for z in vertices]
    if len(vs) < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {len(vs)}")
    if not allow_ideal and any(is_ideal(z) for z in vs):
        raise IdealVertex("ideal vertices are not allowed for this polygon")
    for k in range(len(vs)):
        core._check_distinct(vs[k], vs[(k + 1) % len(vs)])
    reoriented = False
    if check_orientation and shoelace(vs) < 0:
        if not auto_orient:
            raise NegativeOrientation("vertices are clockwise; reverse them or enable auto_orient")
        vs.reverse()
        reoriented = True
    return _build(vs, reoriented)


# ---------------------------------------------------------------------------
# classification and simplicity


class SideKind(enum.Enum):
    INWARD = "inward"
    OUTWARD = "outward"


@dataclass(frozen=True)
class SideClassification:
    kind: SideKind
    cross: float


def classify_side(p: HyperbolicPolygon, k: int) -> SideClassification:
    """Inward iff the endpoint cross product is positive; diameters are outward."""
    cross = p.sides[k].cross
    return SideClassification(SideKind.INWARD if cross > 0 else SideKind.OUTWARD, cross)


def _orient(a: complex, b: complex, c: complex) -> float:
    return ((b - a).conjugate() * (c - a)).imag


def _on_segment(a: complex, b: complex, c: complex) -> bool:
    return (min(a.real, b.real) <= c.real <= max(a.real, b.real)
            and min(a.imag, b.imag) <= c.imag <= max(a.imag, b.imag))


def _segments_meet(p1, p2, q1, q2, eps=1e-15) -> bool:
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True
    return ((abs(d1) <= eps and _on_segment(q1, q2, p1))
            or (abs(d2) <= eps and _on_segment(q1, q2, p2))
            or (abs(d3) <= eps and _on_segment(p1, p2, q1))
            or (abs(d4) <= eps and _on_segment(p1, p2, q2)))


def is_simple(p: HyperbolicPolygon) -> bool:
    """True when no two non-adjacent sides meet.

    Geodesics are straight chords in the Klein model, so the test runs on
    Klein coordinates with an ordinary segment-intersection predicate.
    Adjacent sides share a vertex and two distinct geodesics meet at most
    once, so only non-adjacent pairs are checked.
    """
    n = p.n
    ks = [core.to_klein(z) for z in p.vertices]
    for i, j in itertools.combinations(range(n), 2):
        if j == i + 1 or (i == 0 and j == n - 1):
            continue
        if _segments_meet(ks[i], ks[(i + 1) % n], ks[j], ks[(j + 1) % n]):
            return False
    return True


def _require_simple(p: HyperbolicPolygon) -> None:
    if not is_simple(p):
        raise SelfIntersecting("operation requires a simple (non-self-intersecting) polygon")


def _require_interior(p: HyperbolicPolygon) -> None:
    if p.has_ideal_vertex:
        raise IdealVertex("operation requires every vertex strictly inside the disk")


# ---------------------------------------------------------------------------
# area formulas


def _computational_term(z: complex, w: complex) -> float:
    p = z.conjugate() * w
    # Re(1 - conj(z) w) > 0 on the closed disk for distinct points, so atan2 == atan(ratio)
    return 2.0 * math.atan2(p.imag, 1.0 - p.real)


def area_computational(p: HyperbolicPolygon) -> float:
    """Sum of ``2 atan((x_k y_{k+1} - y_k x_{k+1}) / (1 - x_k x_{k+1} - y_k y_{k+1}))``.

    Valid on the closed disk.  For a self-intersecting cycle this is the
    raw formula value (a winding-weighted quantity), not a geometric area.
    """
    return math.fsum(_computational_term(s.start, s.end) for s in p.sides)


def area_geometric(p: HyperbolicPolygon) -> float:
    """Arc angles of inward sides minus arc angles of outward sides."""
    terms = []
    for k, s in enumerate(p.sides):
        if classify_side(p, k).kind is SideKind.INWARD:
            terms.append(s.arc_angle)
        else:
            terms.append(-s.arc_angle)
    return math.fsum(terms)


@dataclass(frozen=True)
class AngleSet:
    interior: tuple
    exterior: tuple


def _principal_arg(q: complex) -> float:
    ang = cmath.phase(q)
    return math.pi if ang <= -math.pi else ang


def _out_tangent(z: complex, w: complex) -> complex:
    """Direction of travel at ``z`` along the geodesic ``z -> w``."""
    if not is_ideal(z):
        return (1 - abs(z) ** 2) / side_coefficient(z, w)
    return -_in_tangent(w, z)


def _in_tangent(z: complex, w: complex) -> complex:
    """Direction of travel on arrival at ``w`` along the geodesic ``z -> w``."""
    if not is_ideal(z):
        a = side_coefficient(z, w)
        return a * (1 - abs(z) ** 2) / (z.conjugate() + a) ** 2
    return -_out_tangent(w, z)


def interior_angles(p: HyperbolicPolygon) -> AngleSet:
    """Interior and exterior vertex angles from the geodesic tangent vectors.

    The exterior angle is the principal argument of outgoing over incoming
    tangent, in ``(-pi, pi]``; the interior angle is ``pi`` minus it, so
    reflex vertices get interior angles above ``pi``.  Ideal vertices get
    interior angle 0.
    """
    n = p.n
    interior, exterior = [], []
    for k, z in enumerate(p.vertices):
        if is_ideal(z):
            ext = math.pi
        else:
            u = _out_tangent(z, p.vertices[(k + 1) % n])
            v = _in_tangent(p.vertices[k - 1], z)
            ext = _principal_arg(u / v)
        exterior.append(ext)
        interior.append(math.pi - ext)
    return AngleSet(tuple(interior), tuple(exterior))


def area_classical(p: HyperbolicPolygon) -> float:
    """Angle defect ``pi (n - 2) - sum(interior angles)``; needs a simple polygon."""
    _require_simple(p)
    return math.pi * (p.n - 2) - math.fsum(interior_angles(p).interior)


def perimeter(p: HyperbolicPolygon) -> float:
    """Sum of ``2 atanh(1 / |a_k|)`` over the sides; infinite with any ideal vertex."""
    return math.fsum(s.length for s in p.sides)


def area_perimeter_identity(p: HyperbolicPolygon) -> complex:
    """``(2/i) sum log((|a|^2 + conj(a z)) / (|a|^2 + |a|))``, equal to ``A + iP``."""
    _require_interior(p)
    logs = []
    for s in p.sides:
        a, z = s.a_coeff, s.start
        m2 = abs(a) ** 2
        logs.append(cmath.log((m2 + (a * z).conjugate()) / (m2 + abs(a))))
    total = complex(math.fsum(q.real for q in logs), math.fsum(q.imag for q in logs))
    return -2j * total


class OriginLocation(enum.Enum):
    INTERIOR = "interior"
    EXTERIOR = "exterior"


def area_winding(p: HyperbolicPolygon, origin_location: Optional[OriginLocation] = None) -> float:
    """Area from ``sum 2 arg(1 + 1/(a_k z_k))``, shifted by ``-4 pi`` when 0 is inside.

    ``origin_location`` is checked against a numeric winding number of the
    boundary about 0; passing None uses the numeric result directly.

    Raises
    ------
    IdealVertex, ZeroVertex, OriginOnBoundary, BranchViolation, OriginLocationMismatch
    """
    from .oracle import winding_number

    _require_interior(p)
    if any(abs(z) <= core.COINCIDENT_EPS for z in p.vertices):
        raise ZeroVertex("the origin is a vertex")
    if any(core.distance_to_arc(s, 0j) <= ORIGIN_BOUNDARY_EPS for s in p.sides):
        raise OriginOnBoundary("the origin lies on the polygon boundary")
    wraps = winding_number(p, 0j)
    if wraps not in (0, 1):
        raise OriginLocationMismatch(f"boundary winds {wraps} times about the origin")
    measured = OriginLocation.INTERIOR if wraps == 1 else OriginLocation.EXTERIOR
    if origin_location is not None and origin_location is not measured:
        raise OriginLocationMismatch(
            f"origin asserted {origin_location.value} but winding says {measured.value}")
    terms = []
    for s in p.sides:
        az = s.a_coeff * s.start
        if abs(az.imag) <= BRANCH_EPS and -1.0 - BRANCH_EPS <= az.real <= BRANCH_EPS:
            raise BranchViolation(f"a_k z_k = {az!r} lies on the branch cut [-1, 0]")
        terms.append(2.0 * cmath.phase(1 + 1 / az))
    if measured is OriginLocation.INTERIOR:
        terms.append(-4.0 * math.pi)
    return math.fsum(terms)


def turning_residual(p: HyperbolicPolygon) -> float:
    """``|sum(tangent sweeps) + sum(exterior angles) - 2 pi|`` for a simple polygon.

    Each inward side sweeps its tangent by ``-alpha``, each outward side by
    ``+beta``.
    """
    _require_simple(p)
    sweeps = []
    for k, s in enumerate(p.sides):
        inward = classify_side(p, k).kind is SideKind.INWARD
        sweeps.append(-s.arc_angle if inward else s.arc_angle)
    total = math.fsum(sweeps + list(interior_angles(p).exterior))
    return abs(total - 2.0 * math.pi)


# ---------------------------------------------------------------------------
# report


@dataclass
class AreaReport:
    a_computational: float
    a_geometric: float
    perimeter: float
    a_classical: Optional[float] = None
    a_winding: Optional[float] = None
    identity: Optional[complex] = None
    identity_residual: Optional[complex] = None
    max_pairwise_discrepancy: float = 0.0
    tolerance: float = 1e-8
    skipped: dict = field(default_factory=dict)

    def area_values(self) -> dict:
        vals = {"computational": self.a_computational, "geometric": self.a_geometric}
        if self.a_classical is not None:
            vals["classical"] = self.a_classical
        if self.identity is not None:
            vals["identity"] = self.identity.real
        if self.a_winding is not None:
            vals["winding"] = self.a_winding
        return vals

    @property
    def agrees(self) -> bool:
        ok = self.max_pairwise_discrepancy <= self.tolerance
        if self.identity_residual is not None:
            ok = ok and abs(self.identity_residual.imag) <= self.tolerance
        return ok


def area_report(p: HyperbolicPolygon, tol: float = 1e-8) -> AreaReport:
    """Run every applicable area formula and record their pairwise spread.

    Formulas whose preconditions fail are left as None with the reason in
    ``skipped``.
    """
    rep = AreaReport(area_computational(p), area_geometric(p), perimeter(p), tolerance=tol)
    try:
        rep.a_classical = area_classical(p)
    except HypergonError as exc:
        rep.skipped["classical"] = str(exc)
    try:
        rep.identity = area_perimeter_identity(p)
        rep.identity_residual = rep.identity - complex(rep.a_computational, rep.perimeter)
    except HypergonError as exc:
        rep.skipped["identity"] = str(exc)
    try:
        rep.a_winding = area_winding(p)
    except HypergonError as exc:
        rep.skipped["winding"] = str(exc)
    vals = list(rep.area_values().values())
    rep.max_pairwise_discrepancy = max(abs(x - y) for x, y in itertools.combinations(vals, 2))
    return rep
