"""Fixed-perimeter area maximisation and the closed-form isoperimetric bound.

The search space is every configuration ``(z_1, ..., z_n)`` of disk points,
self-intersecting or not, normalised by an isometry so that ``z_1 = 0``.
With that normalisation every feasible vertex satisfies
``|z_k| <= tanh(P / 2)``, so the search runs over a compact set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from scipy import optimize as sopt

from .core import MobiusIsometry, hyperbolic_distance
from .corpus import random_simple_polygon
from .errors import HypergonError, InputRange, NoFeasibleIterate
from .polygon import HyperbolicPolygon, area_computational, is_simple, perimeter, validate

# cosh(P / 2n) overflows past this
MAX_HALF_SIDE = 350.0


def _check_problem(n: int, P: float) -> None:
    if int(n) != n or n < 3:
        raise InputRange(f"need an integer n >= 3, got {n}")
    if not (P > 0 and math.isfinite(P)):
        raise InputRange(f"perimeter must be positive and finite, got {P}")
    if P / (2 * n) > MAX_HALF_SIDE:
        raise InputRange(f"P / 2n = {P / (2 * n):.6g} exceeds {MAX_HALF_SIDE}")


def area_bound(n: int, P: float) -> float:
    """Largest area of an n-gon with perimeter ``P``: ``pi (n-2) - 2n asin(cos(pi/n) / cosh(P/2n))``.

    The value is cross-checked against the equivalent condition
    ``Re cos((A + 2 pi)/2n + i P/2n) = cos(pi/n)``.
    """
    _check_problem(n, P)
    h = P / (2 * n)
    bound = math.pi * (n - 2) - 2 * n * math.asin(math.cos(math.pi / n) / math.cosh(h))
    lhs = math.cos((bound + 2 * math.pi) / (2 * n)) * math.cosh(h)
    if abs(lhs - math.cos(math.pi / n)) > 1e-12 * max(1.0, math.cosh(h)):
        raise ArithmeticError(f"bound consistency check failed: {lhs} vs {math.cos(math.pi / n)}")
    return bound


def feasibility_radius(P: float) -> float:
    """``tanh(P / 2)``: no vertex of a perimeter-``P`` polygon with a vertex at 0 lies farther out."""
    return math.tanh(P / 2)


def _regular_perimeter(n: int, r: float) -> float:
    z, w = complex(r, 0), r * complex(math.cos(2 * math.pi / n), math.sin(2 * math.pi / n))
    return n * hyperbolic_distance(z, w)


def regular_ngon(n: int, P: float) -> HyperbolicPolygon:
    """Regular n-gon centred at 0 with perimeter ``P``; circumradius found by bisection."""
    _check_problem(n, P)
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _regular_perimeter(n, mid) < P:
            lo = mid
        else:
            hi = mid
    r = lo if abs(_regular_perimeter(n, lo) - P) <= abs(_regular_perimeter(n, hi) - P) else hi
    if not abs(_regular_perimeter(n, r) - P) <= 1e-9 * max(1.0, P):
        raise InputRange(f"perimeter {P} puts the regular {n}-gon on the unit circle")
    return validate([r * np.exp(2j * np.pi * k / n) for k in range(n)])


# ---------------------------------------------------------------------------
# optimiser


@dataclass(frozen=True)
class IsoperimetricProblem:
    n: int
    target_perimeter: float

    def __post_init__(self):
        _check_problem(self.n, self.target_perimeter)


@dataclass(frozen=True)
class OptimizerConfig:
    starts: int = 8
    perimeter_tol: float = 1e-8
    gap: float = 1e-4
    seed: int = 0
    penalties: Tuple[float, ...] = (10.0, 1e2, 1e3, 1e4)
    stage_maxiter: int = 4000
    polish: bool = True


@dataclass
class IsoperimetricResult:
    vertices: List[complex]
    area: float
    perimeter_residual: float
    bound_value: float
    iterations: int
    trace: List[Tuple[int, float, float]] = field(default_factory=list)
    is_simple: bool = True
    regular_area: float = float("nan")
    start_index: int = 0

    @property
    def gap(self) -> float:
        return self.bound_value - self.area


def _pack(zs: np.ndarray) -> np.ndarray:
    return np.concatenate([zs[1:].real, zs[1:].imag])


def _unpack(x: np.ndarray, radius: float) -> np.ndarray:
    m = len(x) // 2
    zs = np.concatenate([[0j], x[:m] + 1j * x[m:]])
    mod = np.abs(zs)
    over = mod > radius
    zs[over] *= radius / mod[over]
    return zs


def _area_np(zs: np.ndarray) -> float:
    p = np.conj(zs) * np.roll(zs, -1)
    return float(np.sum(2 * np.arctan2(p.imag, 1 - p.real)))


def _perimeter_np(zs: np.ndarray) -> float:
    w = np.roll(zs, -1)
    x = np.abs((w - zs) / (1 - np.conj(zs) * w))
    return float(np.sum(2 * np.arctanh(np.minimum(x, 1 - 1e-16))))


def _to_origin(zs: np.ndarray) -> np.ndarray:
    return np.asarray(MobiusIsometry(complex(zs[0]))(zs))


def _rescale_to_perimeter(zs: np.ndarray, target: float, radius: float) -> np.ndarray:
    """Scale about ``z_1 = 0`` until the perimeter hits ``target``."""
    far = np.max(np.abs(zs))
    s_hi = radius / far
    if _perimeter_np(zs * s_hi) < target:
        return zs * s_hi
    s = sopt.brentq(lambda s: _perimeter_np(zs * s) - target, 0.0, s_hi, xtol=1e-16, rtol=1e-15)
    return zs * s


def _initial(idx: int, problem: IsoperimetricProblem, rng, radius: float) -> np.ndarray:
    n, P = problem.n, problem.target_perimeter
    if idx == 0:
        zs = np.array(regular_ngon(n, P).vertices)
        zs = zs * (1 + 0.05 * rng.standard_normal(n)) * np.exp(0.05j * rng.standard_normal(n))
    else:
        zs = np.array(random_simple_polygon(rng, n, radius=0.9).vertices)
    return _rescale_to_perimeter(_to_origin(zs), P, radius)


def _run(idx: int, problem: IsoperimetricProblem, cfg: OptimizerConfig, rng) -> IsoperimetricResult:
    P = problem.target_perimeter
    radius = feasibility_radius(P)
    zs = _initial(idx, problem, rng, radius)
    x = _pack(zs)
    trace, iterations = [], 0
    for mu in cfg.penalties:
        def objective(x, mu=mu):
            z = _unpack(x, radius)
            return -(_area_np(z) - mu * (_perimeter_np(z) - P) ** 2)

        res = sopt.minimize(objective, x, method="Nelder-Mead",
                            options={"maxiter": cfg.stage_maxiter, "xatol": 1e-11, "fatol": 1e-14,
                                     "adaptive": True})
        x = res.x
        iterations += int(res.nit)
        z = _unpack(x, radius)
        trace.append((iterations, _area_np(z), abs(_perimeter_np(z) - P)))
    if cfg.polish:
        cons = [{"type": "eq", "fun": lambda x: _perimeter_np(_unpack(x, radius)) - P},
                {"type": "ineq", "fun": lambda x: radius ** 2 - np.abs(_unpack(x, np.inf)[1:]) ** 2}]
        res = sopt.minimize(lambda x: -_area_np(_unpack(x, radius)), x, method="SLSQP",
                            constraints=cons, options={"maxiter": 500, "ftol": 1e-15})
        if np.all(np.isfinite(res.x)):
            x = res.x
        iterations += int(res.nit)
    zs = _rescale_to_perimeter(_unpack(x, radius), P, radius)
    poly = validate([complex(z) for z in zs], check_orientation=False)
    area = area_computational(poly)
    resid = abs(perimeter(poly) - P)
    trace.append((iterations, area, resid))
    return IsoperimetricResult(
        vertices=list(poly.vertices), area=area, perimeter_residual=resid,
        bound_value=area_bound(problem.n, P), iterations=iterations, trace=trace,
        is_simple=is_simple(poly), start_index=idx)


def _rank(r: IsoperimetricResult):
    return (r.area, [(-z.real, -z.imag) for z in r.vertices])


def optimize(problem: IsoperimetricProblem, cfg: OptimizerConfig = OptimizerConfig()) -> IsoperimetricResult:
    """Maximise area at fixed perimeter by multistart penalised simplex search.

    Start 0 is a perturbed regular polygon, the rest are random simple
    polygons; every start is moved so that ``z_1 = 0`` and rescaled to the
    target perimeter.  Each penalty stage runs Nelder-Mead on
    ``A - mu (P - target)^2``; an SLSQP pass (finite-difference gradients)
    with the perimeter as an equality constraint polishes the result, which
    is finally rescaled about the origin onto the exact perimeter.

    Raises
    ------
    NoFeasibleIterate
        If no start ends within ``cfg.perimeter_tol`` of the target perimeter.
    """
    seqs = np.random.SeedSequence(cfg.seed).spawn(cfg.starts)
    runs = []
    for i, s in enumerate(seqs):
        try:
            runs.append(_run(i, problem, cfg, np.random.default_rng(s)))
        except HypergonError:
            # a start whose vertices collapse together cannot be validated; drop it
            continue
    if not runs:
        raise NoFeasibleIterate("every start degenerated")
    feasible = [r for r in runs if r.perimeter_residual <= cfg.perimeter_tol]
    if not feasible:
        worst = min(r.perimeter_residual for r in runs)
        raise NoFeasibleIterate(f"best perimeter residual {worst:.3g} exceeds {cfg.perimeter_tol}")
    best = max(feasible, key=_rank)
    reg = regular_ngon(problem.n, problem.target_perimeter)
    best.regular_area = area_computational(reg.transformed(MobiusIsometry(reg.vertices[0])))
    return best
