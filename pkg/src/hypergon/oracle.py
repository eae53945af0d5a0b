"""Numerical cross-checks that avoid the closed-form area formulas.

Everything here integrates the metric directly: an adaptive Gauss-Kronrod
line integral of ``2 conj(z) / (1 - |z|^2) dz`` around the boundary, the
arclength integral of each side, a Monte Carlo estimate of the area
integral of ``rho^2`` and a winding-number point classifier.  None of these
are defined at ideal vertices, where the metric blows up.
"""

from __future__ import annotations

import cmath
import enum
import heapq
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import core
from .core import GeodesicSide, is_ideal, make_side
from .errors import IdealVertex, ToleranceNotMet
from .polygon import HyperbolicPolygon, _require_interior, _require_simple

ON_BOUNDARY_EPS = 1e-9
RNG_ALGORITHM = "numpy.random.PCG64 via SeedSequence.spawn"
MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-9
    max_depth: int = 40

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_depth < 10:
            raise ValueError("max_depth must be at least 10")


def metric_density(z):
    """Conformal factor ``2 / (1 - |z|^2)`` of the disk metric."""
    return 2.0 / (1.0 - np.abs(z) ** 2)


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod (7, 15)

_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD_W = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_W = np.zeros(15)
_GAUSS_W[1:7:2] = _WG[:3]
_GAUSS_W[7] = _WG[3]
_GAUSS_W[9:15:2] = _WG[:3][::-1]


def _gk15(f, lo, hi):
    half = 0.5 * (hi - lo)
    vals = f(0.5 * (hi + lo) + half * _NODES)
    k = half * np.dot(_KRONROD_W, vals)
    g = half * np.dot(_GAUSS_W, vals)
    return k, abs(k - g)


def adaptive_quad(f: Callable, lo: float, hi: float, cfg: QuadratureConfig = QuadratureConfig()):
    """Integrate a vectorised (possibly complex-valued) ``f`` over ``[lo, hi]``.

    The panel with the largest Kronrod-minus-Gauss estimate is bisected
    until the summed estimate drops below ``cfg.abs_tol``.  Panels whose
    estimate is already at rounding level are never split.

    Raises
    ------
    ToleranceNotMet
        If a panel that still needs splitting sits ``cfg.max_depth`` bisections deep.
    """
    heap = []
    counter = itertools.count()

    def push(a, b, depth):
        val, err = _gk15(f, a, b)
        if err <= 50 * np.finfo(float).eps * abs(val):
            err = 0.0
        heapq.heappush(heap, (-err, next(counter), a, b, depth, complex(val)))

    push(lo, hi, 0)
    while math.fsum(-h[0] for h in heap) > cfg.abs_tol:
        neg_err, _, a, b, depth, _ = heapq.heappop(heap)
        if depth >= cfg.max_depth:
            raise ToleranceNotMet(
                f"quadrature error {-neg_err:.3g} on [{a}, {b}] after {depth} bisections")
        mid = 0.5 * (a + b)
        push(a, mid, depth + 1)
        push(mid, b, depth + 1)
    return complex(math.fsum(h[5].real for h in heap), math.fsum(h[5].imag for h in heap))


# ---------------------------------------------------------------------------
# line integrals


class LineIntegralResult(NamedTuple):
    area: float
    real_residual: float


def line_integral_area(p: HyperbolicPolygon, cfg: QuadratureConfig = QuadratureConfig()) -> LineIntegralResult:
    """Area as ``Im`` of the boundary integral of ``2 conj(z) / (1 - |z|^2) dz``.

    The real part of that integral vanishes for a closed curve inside the
    disk; its magnitude is returned as ``real_residual``.
    """
    _require_interior(p)
    total = []
    for s in p.sides:
        def integrand(t, s=s):
            z = core.geodesic_parameterize(s, t)
            return 2 * np.conj(z) / (1 - np.abs(z) ** 2) * core.geodesic_velocity(s, t)
        total.append(adaptive_quad(integrand, 0.0, 1.0, cfg))
    re = math.fsum(v.real for v in total)
    im = math.fsum(v.imag for v in total)
    return LineIntegralResult(im, abs(re))


def arclength_numeric(side: GeodesicSide, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Hyperbolic length of a side by integrating ``rho(gamma) |gamma'|`` over ``[0, 1]``."""
    if side.has_ideal_endpoint:
        raise IdealVertex("numeric arclength needs interior endpoints")

    def integrand(t):
        return metric_density(core.geodesic_parameterize(side, t)) * np.abs(core.geodesic_velocity(side, t))

    return adaptive_quad(integrand, 0.0, 1.0, cfg).real


# ---------------------------------------------------------------------------
# winding numbers


class PointLocation(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_BOUNDARY = "on_boundary"


def _side_curve(side: GeodesicSide) -> Callable[[float], complex]:
    """A parameterisation of ``side`` on ``[0, 1]`` that also covers ideal start points."""
    if side.a_coeff is not None:
        return lambda t: core.geodesic_parameterize(side, t)
    if not is_ideal(side.end):
        back = make_side(side.end, side.start)
        return lambda t: core.geodesic_parameterize(back, 1.0 - t)
    z, w = side.start, side.end
    if side.arc.is_diameter:
        return lambda t: z + t * (w - z)
    c, r = side.arc.center, side.arc.radius
    phi0 = cmath.phase(z - c)
    span = cmath.phase((w - c) / (z - c))
    return lambda t: c + r * cmath.exp(1j * (phi0 + t * span))


def _arg_sweep(f, q, t0, t1, f0, f1, depth) -> float:
    step = cmath.phase((f1 - q) / (f0 - q))
    if abs(step) <= 0.5 or depth >= 60:
        return step
    tm = 0.5 * (t0 + t1)
    fm = f(tm)
    return _arg_sweep(f, q, t0, tm, f0, fm, depth + 1) + _arg_sweep(f, q, tm, t1, fm, f1, depth + 1)


def winding_number(p: HyperbolicPolygon, q: complex, grid: int = 8) -> int:
    """Winding number of the boundary about ``q`` from summed argument increments.

    Each side is sampled on a uniform grid that is bisected wherever a
    single step turns by more than half a radian.  ``q`` must not lie on
    the boundary.
    """
    q = complex(q)
    total = []
    for s in p.sides:
        f = _side_curve(s)
        ts = [k / grid for k in range(grid + 1)]
        pts = [f(t) for t in ts]
        for k in range(grid):
            total.append(_arg_sweep(f, q, ts[k], ts[k + 1], pts[k], pts[k + 1], 0))
    return round(math.fsum(total) / (2 * math.pi))


def point_in_polygon(p: HyperbolicPolygon, q) -> PointLocation:
    """Classify ``q`` as inside (nonzero winding), outside, or on a side (within 1e-9)."""
    q = complex(q)
    if min(core.distance_to_arc(s, q) for s in p.sides) <= ON_BOUNDARY_EPS:
        return PointLocation.ON_BOUNDARY
    return PointLocation.INSIDE if winding_number(p, q) != 0 else PointLocation.OUTSIDE


def winding_numbers(p: HyperbolicPolygon, qs: np.ndarray) -> np.ndarray:
    """Vectorised winding numbers for many query points.

    Each arc's argument increment is the chord's principal increment plus
    a full turn for points caught between the arc and its chord.  Points
    on the boundary get an arbitrary value.
    """
    qs = np.asarray(qs, dtype=complex)
    total = np.zeros(qs.shape)
    for s in p.sides:
        z, w = s.start, s.end
        total += np.angle((w - qs) / (z - qs))
        if s.arc.is_diameter:
            continue
        c, r = s.arc.center, s.arc.radius
        side_c = _orient_np(z, w, c)
        side_q = _orient_np(z, w, qs)
        caught = (np.abs(qs - c) < r) & (np.sign(side_q) == -np.sign(side_c))
        # arc bulges away from its centre: centre on the right means a clockwise loop
        total += np.where(caught, 2 * np.pi * (1.0 if side_c > 0 else -1.0), 0.0)
    return np.rint(total / (2 * np.pi)).astype(int)


def _orient_np(a, b, c):
    return (np.conj(b - a) * (c - a)).imag


# ---------------------------------------------------------------------------
# Monte Carlo


class MonteCarloResult(NamedTuple):
    estimate: float
    std_error: float
    samples: int
    seed: int
    generator: str


def arc_bounding_box(p: HyperbolicPolygon) -> tuple:
    """Euclidean ``(xmin, xmax, ymin, ymax)`` of the sides, including arc bulges."""
    pts = list(p.vertices)
    for s in p.sides:
        if s.arc.is_diameter:
            continue
        c, r = s.arc.center, s.arc.radius
        span = cmath.phase((s.end - c) / (s.start - c))
        for d in (1, 1j, -1, -1j):
            rel = cmath.phase(d * r / (s.start - c))
            if rel * span >= 0 and abs(rel) <= abs(span):
                pts.append(c + d * r)
    xs = [z.real for z in pts]
    ys = [z.imag for z in pts]
    return min(xs), max(xs), min(ys), max(ys)


def _mc_chunk(p, box, seed_seq, size):
    xmin, xmax, ymin, ymax = box
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    q = rng.uniform(xmin, xmax, size) + 1j * rng.uniform(ymin, ymax, size)
    inside = winding_numbers(p, q) != 0
    vals = np.where(inside, metric_density(q) ** 2, 0.0) * ((xmax - xmin) * (ymax - ymin))
    return float(np.sum(vals)), float(np.sum(vals * vals))


def montecarlo_area(p: HyperbolicPolygon, samples: int, seed: int, workers: int = 1) -> MonteCarloResult:
    """Unbiased Monte Carlo estimate of the area integral of ``rho^2``.

    Samples are uniform over the bounding box of the sides.  The stream is
    split into fixed-size chunks with independent seeds derived from
    ``seed``, so the result does not depend on ``workers``.
    """
    _require_interior(p)
    _require_simple(p)
    box = arc_bounding_box(p)
    if samples < 2:
        raise ValueError("need at least two samples")
    if (box[1] - box[0]) * (box[3] - box[2]) == 0.0:
        return MonteCarloResult(0.0, 0.0, samples, seed, RNG_ALGORITHM)
    n_chunks = -(-samples // MC_CHUNK)
    sizes = [MC_CHUNK] * (n_chunks - 1) + [samples - MC_CHUNK * (n_chunks - 1)]
    seqs = np.random.SeedSequence(seed).spawn(n_chunks)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda a: _mc_chunk(p, box, *a), zip(seqs, sizes)))
    else:
        parts = [_mc_chunk(p, box, s, n) for s, n in zip(seqs, sizes)]
    total = math.fsum(s for s, _ in parts)
    total_sq = math.fsum(s for _, s in parts)
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return MonteCarloResult(mean, math.sqrt(var / samples), samples, seed, RNG_ALGORITHM)
