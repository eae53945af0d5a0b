import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergon import area_computational, geodesic_parameterize, make_side, validate
from hypergon.corpus import random_simple_polygon
from hypergon.errors import IdealVertex, SelfIntersecting, ToleranceNotMet
from hypergon.oracle import (
    RNG_ALGORITHM,
    PointLocation,
    QuadratureConfig,
    adaptive_quad,
    arc_bounding_box,
    arclength_numeric,
    line_integral_area,
    metric_density,
    montecarlo_area,
    point_in_polygon,
    winding_number,
    winding_numbers,
)

from conftest import SQUARE_AREA, SQUARE_SIDE, roots_of_unity


class TestQuadrature:
    def test_polynomial_exact(self):
        # GK15 integrates degree 22 exactly on one panel
        assert adaptive_quad(lambda t: t ** 20, 0, 1) == pytest.approx(1 / 21, abs=1e-15)

    def test_peaked(self):
        assert adaptive_quad(lambda t: 1 / (t + 1e-3), 0, 1).real == pytest.approx(math.log(1001), abs=1e-9)

    def test_complex(self):
        val = adaptive_quad(lambda t: np.exp(1j * 2 * np.pi * t), 0, 1)
        assert abs(val) <= 1e-14

    def test_oscillatory(self):
        assert adaptive_quad(lambda t: np.cos(50 * t), 0, 2).real == pytest.approx(math.sin(100) / 50, abs=1e-10)

    def test_depth_budget(self):
        with pytest.raises(ToleranceNotMet):
            adaptive_quad(lambda t: np.sign(t - 1 / 3), 0, 1, QuadratureConfig(abs_tol=1e-14, max_depth=12))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            QuadratureConfig(abs_tol=0)


def test_metric_density():
    assert metric_density(0) == 2
    assert metric_density(0.5j) == pytest.approx(8 / 3)


def test_arclength_square_side():
    assert arclength_numeric(make_side(0.5, 0.5j)) == pytest.approx(SQUARE_SIDE, abs=1e-9)


def test_arclength_diameter():
    assert arclength_numeric(make_side(-0.3, 0.6)) == pytest.approx(
        2 * math.atanh(0.3) + 2 * math.atanh(0.6), abs=1e-9)


def test_arclength_rejects_ideal():
    with pytest.raises(IdealVertex):
        arclength_numeric(make_side(0.2, 1j))


def test_line_integral_square(square):
    res = line_integral_area(square)
    assert res.area == pytest.approx(SQUARE_AREA, abs=1e-9)
    assert res.real_residual <= 1e-9


def test_line_integral_near_boundary():
    p = validate([0.97 * z for z in roots_of_unity(5)])
    res = line_integral_area(p)
    assert res.area == pytest.approx(area_computational(p), abs=1e-7)


class TestWinding:
    def test_square(self, square):
        assert winding_number(square, 0) == 1
        assert winding_number(square, 0.9) == 0
        # just outside the inward-bowed side midpoint but inside the Euclidean square
        assert winding_number(square, 0.24 + 0.24j) == 0
        assert winding_number(square, 0.2 + 0.2j) == 1

    def test_reversed(self, square):
        assert winding_number(square.reversed(), 0) == -1

    def test_ideal(self, ideal_triangle):
        assert winding_number(ideal_triangle, 0) == 1
        assert winding_number(ideal_triangle, 0.99) == 1  # inside the cusp at 1
        assert winding_number(ideal_triangle, 0.99 * np.exp(1j * np.pi / 3)) == 0

    def test_point_in_polygon(self, square):
        assert point_in_polygon(square, 0) is PointLocation.INSIDE
        assert point_in_polygon(square, 0.5) is PointLocation.ON_BOUNDARY
        assert point_in_polygon(square, -0.9j) is PointLocation.OUTSIDE

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(3, 10))
    def test_vectorised_matches_sweep(self, seed, n):
        rng = np.random.default_rng(seed)
        p = random_simple_polygon(rng, n)
        qs = rng.uniform(-1, 1, 40) + 1j * rng.uniform(-1, 1, 40)
        qs = qs[np.abs(qs) < 0.99]
        fast = winding_numbers(p, qs)
        for q, w in zip(qs, fast):
            if point_in_polygon(p, q) is not PointLocation.ON_BOUNDARY:
                assert w == winding_number(p, q)


def test_bounding_box_contains_arc(square):
    xmin, xmax, ymin, ymax = arc_bounding_box(square)
    assert (xmin, xmax, ymin, ymax) == pytest.approx((-0.5, 0.5, -0.5, 0.5))
    p = validate([0.2 + 0.2j, 0.7 + 0.1j, 0.4 + 0.6j])
    box = arc_bounding_box(p)
    for s in p.sides:
        g = geodesic_parameterize(s, np.linspace(0, 1, 201))
        assert g.real.min() >= box[0] - 1e-12 and g.real.max() <= box[1] + 1e-12
        assert g.imag.min() >= box[2] - 1e-12 and g.imag.max() <= box[3] + 1e-12


class TestMonteCarlo:
    def test_square(self, square):
        res = montecarlo_area(square, 200_000, seed=1)
        assert abs(res.estimate - SQUARE_AREA) <= 4 * res.std_error
        assert res.std_error < 0.01
        assert res.generator == RNG_ALGORITHM
        assert res.samples == 200_000 and res.seed == 1

    def test_reproducible(self, square):
        assert montecarlo_area(square, 100_000, seed=5) == montecarlo_area(square, 100_000, seed=5)

    def test_workers_do_not_change_result(self, square):
        assert montecarlo_area(square, 150_000, seed=9, workers=3) == montecarlo_area(square, 150_000, seed=9)

    def test_seed_matters(self, square):
        assert montecarlo_area(square, 10_000, seed=1).estimate != montecarlo_area(square, 10_000, seed=2).estimate

    def test_degenerate(self, collinear_triangle):
        res = montecarlo_area(collinear_triangle, 1000, seed=0)
        assert res.estimate == 0 and res.std_error == 0

    def test_rejects(self, ideal_triangle):
        with pytest.raises(IdealVertex):
            montecarlo_area(ideal_triangle, 1000, seed=0)
        bowtie = validate([0.5 + 0.5j, -0.5 - 0.5j, -0.5 + 0.5j, 0.5 - 0.5j], check_orientation=False)
        with pytest.raises(SelfIntersecting):
            montecarlo_area(bowtie, 1000, seed=0)
