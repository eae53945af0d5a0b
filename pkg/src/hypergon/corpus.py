"""Seeded random polygons and isometries for property suites."""

from __future__ import annotations

import math

import numpy as np

from .core import MobiusIsometry
from .errors import HypergonError
from .polygon import HyperbolicPolygon, is_simple, validate


def from_klein(k):
    return k / (1 + np.sqrt(1 - np.abs(k) ** 2))


def random_isometry(rng: np.random.Generator, max_radius: float = 0.9) -> MobiusIsometry:
    r = max_radius * math.sqrt(rng.uniform())
    a = r * np.exp(1j * rng.uniform(0, 2 * np.pi))
    return MobiusIsometry(complex(a), float(rng.uniform(-np.pi, np.pi)))


def _uniform_disk(rng, size, radius):
    r = radius * np.sqrt(rng.uniform(size=size))
    return r * np.exp(1j * rng.uniform(0, 2 * np.pi, size=size))


def random_simple_polygon(
    rng: np.random.Generator,
    n: int,
    radius: float = 0.9,
    max_tries: int = 1000,
) -> HyperbolicPolygon:
    """A simple, positively oriented n-gon with every vertex inside ``|z| <= radius``.

    Points are scattered in a random sub-disk, sorted by angle about their
    centroid in Klein coordinates (where sides are straight) and kept only if
    the result passes :func:`validate` and :func:`is_simple`.
    """
    for _ in range(max_tries):
        centre = complex(_uniform_disk(rng, 1, 0.7 * radius)[0])
        spread = rng.uniform(0.1, 1.0) * radius
        pts = centre + _uniform_disk(rng, n, spread)
        if np.any(np.abs(pts) > radius):
            continue
        k = 2 * pts / (1 + np.abs(pts) ** 2)
        order = np.argsort(np.angle(k - k.mean()))
        verts = [complex(z) for z in from_klein(k[order])]
        try:
            poly = validate(verts, allow_ideal=False)
        except HypergonError:
            continue
        if is_simple(poly):
            return poly
    raise RuntimeError(f"no simple {n}-gon found in {max_tries} tries")


def random_corpus(seed: int, count: int, n_max: int = 10, radius: float = 0.9) -> list:
    """``count`` polygons with 3 to ``n_max`` vertices, reproducible from ``seed``."""
    rng = np.random.default_rng(seed)
    return [random_simple_polygon(rng, int(rng.integers(3, n_max + 1)), radius) for _ in range(count)]
