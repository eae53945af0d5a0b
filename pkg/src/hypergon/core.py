"""Points, distances, disk automorphisms and single-side geodesic geometry.

Points of the closed unit disk are plain Python ``complex`` values (numpy
complex arrays are accepted wherever the formula vectorises).  A point whose
modulus is within :data:`BOUNDARY_EPS` of 1 is an *ideal* point; it is
snapped onto the unit circle by :func:`disk_point`.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateSide, IdealVertex, OutsideDisk

BOUNDARY_EPS = 1e-12
COINCIDENT_EPS = 1e-14
DIAMETER_RTOL = 1e-13
# 1 - x below this and 2*atanh(x) is reported as infinite
ATANH_EDGE = 1e-15


def is_ideal(z: complex) -> bool:
    return abs(z) >= 1.0 - BOUNDARY_EPS


def disk_point(z) -> complex:
    """Coerce ``z`` to a complex point of the closed disk, snapping ideal points.

    Raises OutsideDisk when ``|z| > 1 + BOUNDARY_EPS``.
    """
    z = complex(z)
    r = abs(z)
    if not math.isfinite(r) or r > 1.0 + BOUNDARY_EPS:
        raise OutsideDisk(f"point {z!r} lies outside the closed unit disk")
    if r >= 1.0 - BOUNDARY_EPS:
        return z / r
    return z


def double_atanh(x: float) -> float:
    """``2 atanh(x)`` via ``log((1+x)/(1-x))``; infinite once ``1 - x < 1e-15``."""
    if 1.0 - x < ATANH_EDGE:
        return math.inf
    return math.log((1.0 + x) / (1.0 - x))


def to_klein(z):
    """Map Poincare disk coordinates to Klein disk coordinates (geodesics become chords)."""
    return 2 * z / (1 + abs(z) ** 2)


# ---------------------------------------------------------------------------
# isometries


@dataclass(frozen=True)
class MobiusIsometry:
    """Disk automorphism ``z -> e^{i theta} (z - a) / (1 - conj(a) z)``."""

    a: complex = 0j
    theta: float = 0.0

    def __post_init__(self):
        if not abs(self.a) < 1.0:
            raise OutsideDisk(f"isometry parameter |a| = {abs(self.a)} must be < 1")

    @classmethod
    def sending_to_origin(cls, z: complex, theta: float = 0.0) -> "MobiusIsometry":
        return cls(complex(z), theta)

    def __call__(self, z):
        a = self.a
        return cmath.exp(1j * self.theta) * (z - a) / (1 - a.conjugate() * z)

    def derivative(self, z):
        a = self.a
        return cmath.exp(1j * self.theta) * (1 - abs(a) ** 2) / (1 - a.conjugate() * z) ** 2

    def inverse(self) -> "MobiusIsometry":
        return MobiusIsometry(-self.a * cmath.exp(1j * self.theta), -self.theta)

    def compose(self, inner: "MobiusIsometry") -> "MobiusIsometry":
        """Return ``self o inner`` (``inner`` is applied first)."""
        # the composite sends inner^{-1}(self.a) to 0; its derivative there fixes theta
        a = inner.inverse()(self.a)
        rot = self.derivative(self.a) * inner.derivative(a) * (1 - abs(a) ** 2)
        return MobiusIsometry(a, cmath.phase(rot))


def mobius_apply(m: MobiusIsometry, z) -> complex:
    """Apply ``m`` to a disk point, keeping boundary points on the boundary."""
    return disk_point(m(disk_point(z)))


def hyperbolic_distance(z, w) -> float:
    """Hyperbolic distance ``2 atanh |(w - z) / (1 - conj(z) w)|``; ``inf`` at ideal points.

    Evaluated as ``2 asinh(|z - w| / sqrt((1 - |z|^2)(1 - |w|^2)))``, which
    avoids the cancellation in ``1 - |...|`` for points near the boundary.
    """
    z, w = disk_point(z), disk_point(w)
    if abs(z - w) <= COINCIDENT_EPS:
        return 0.0
    if is_ideal(z) or is_ideal(w):
        return math.inf
    return 2.0 * math.asinh(abs(z - w) / math.sqrt(_one_minus_sq(z) * _one_minus_sq(w)))


def _one_minus_sq(z: complex) -> float:
    r = abs(z)
    return (1.0 - r) * (1.0 + r)


# ---------------------------------------------------------------------------
# single side


def _check_distinct(z: complex, w: complex) -> None:
    if abs(z - w) <= COINCIDENT_EPS:
        raise DegenerateSide(f"consecutive vertices coincide: {z!r}, {w!r}")


def side_coefficient(z, w) -> complex:
    """The coefficient ``a = (1 - conj(z) w) / (w - z)`` of the side ``z -> w``.

    ``a`` is the reciprocal of the image of ``w`` under the automorphism
    centred at ``z``; ``|a| > 1`` for interior ``w`` and ``|a| = 1`` for ideal
    ``w``.  The start point must be interior.
    """
    z, w = complex(z), complex(w)
    _check_distinct(z, w)
    if is_ideal(z):
        raise IdealVertex(f"side coefficient needs an interior start point, got {z!r}")
    return (1 - z.conjugate() * w) / (w - z)


class ArcKind(enum.Enum):
    CIRCULAR_ARC = "circular_arc"
    DIAMETER_SEGMENT = "diameter_segment"


@dataclass(frozen=True)
class ArcDescriptor:
    kind: ArcKind
    center: Optional[complex] = None
    radius: Optional[float] = None

    @property
    def is_diameter(self) -> bool:
        return self.kind is ArcKind.DIAMETER_SEGMENT


def _is_diameter(z: complex, w: complex) -> bool:
    return abs((z.conjugate() * w).imag) <= DIAMETER_RTOL * (1 + abs(z) * abs(w))


def geodesic_circle(z, w) -> ArcDescriptor:
    """Circle orthogonal to the unit circle carrying the geodesic ``z -> w``."""
    z, w = complex(z), complex(w)
    _check_distinct(z, w)
    if _is_diameter(z, w):
        return ArcDescriptor(ArcKind.DIAMETER_SEGMENT)
    num = (1 + abs(z) ** 2) * w - (1 + abs(w) ** 2) * z
    den = z.conjugate() * w - z * w.conjugate()
    c = num / den
    return ArcDescriptor(ArcKind.CIRCULAR_ARC, c, math.sqrt(abs(c) ** 2 - 1))


def arc_angle(z, w) -> float:
    """Central angle in ``[0, pi]`` of the geodesic arc ``z -> w``.

    ``2 atan |Im(conj(z) w) / Re(1 - conj(z) w)|``, valid on the closed disk.
    """
    z, w = complex(z), complex(w)
    _check_distinct(z, w)
    if _is_diameter(z, w):
        return 0.0
    p = z.conjugate() * w
    return 2.0 * math.atan2(abs(p.imag), 1.0 - p.real)


@dataclass(frozen=True)
class GeodesicSide:
    start: complex
    end: complex
    a_coeff: Optional[complex]  # None when start is ideal
    arc: ArcDescriptor
    arc_angle: float
    length: float

    @property
    def cross(self) -> float:
        """``x_k y_{k+1} - y_k x_{k+1}``, the signed cross product of the endpoints."""
        return (self.start.conjugate() * self.end).imag

    @property
    def has_ideal_endpoint(self) -> bool:
        return is_ideal(self.start) or is_ideal(self.end)


def make_side(z, w) -> GeodesicSide:
    z, w = disk_point(z), disk_point(w)
    _check_distinct(z, w)
    a = None if is_ideal(z) else side_coefficient(z, w)
    if a is None or is_ideal(w):
        length = math.inf
    else:
        length = double_atanh(1.0 / abs(a))
    return GeodesicSide(z, w, a, geodesic_circle(z, w), arc_angle(z, w), length)


def geodesic_parameterize(side: GeodesicSide, t):
    """Point ``(t + a z) / (t conj(z) + a)`` on the side, ``t`` in ``[0, 1]``.

    Scalars give a scalar; arrays of ``t`` give an array.
    """
    if side.a_coeff is None:
        raise IdealVertex("geodesic parameterisation needs an interior start point")
    a, z = side.a_coeff, side.start
    return (t + a * z) / (t * z.conjugate() + a)


def geodesic_velocity(side: GeodesicSide, t):
    """Derivative of :func:`geodesic_parameterize` with respect to ``t``."""
    if side.a_coeff is None:
        raise IdealVertex("geodesic parameterisation needs an interior start point")
    a, z = side.a_coeff, side.start
    return a * (1 - abs(z) ** 2) / (t * z.conjugate() + a) ** 2


def distance_to_arc(side: GeodesicSide, q) -> np.ndarray | float:
    """Euclidean distance from ``q`` to the closed geodesic segment of ``side``."""
    z, w = side.start, side.end
    q = np.asarray(q, dtype=complex)
    if side.arc.is_diameter:
        d = w - z
        s = np.clip(((q - z) * np.conj(d)).real / abs(d) ** 2, 0.0, 1.0)
        out = np.abs(q - (z + s * d))
    else:
        c, r = side.arc.center, side.arc.radius
        span = cmath.phase((w - c) / (z - c))
        rel = np.angle((q - c) / (z - c))
        inside = (rel * span >= 0) & (np.abs(rel) <= abs(span))
        ends = np.minimum(np.abs(q - z), np.abs(q - w))
        out = np.where(inside, np.abs(np.abs(q - c) - r), ends)
    return float(out) if out.ndim == 0 else out
