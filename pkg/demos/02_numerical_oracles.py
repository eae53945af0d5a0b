"""
Checking closed forms against brute force
=========================================

The closed forms are cheap; these checks are not, but they share no
algebra with them.  Area is recomputed as a contour integral by
adaptive Gauss-Kronrod quadrature and as a Monte Carlo average of the
metric density, and side lengths are recomputed as arclength integrals.
"""

import math

from hypergon import area_computational, validate
from hypergon.oracle import arclength_numeric, line_integral_area, montecarlo_area

square = validate([0.5, 0.5j, -0.5, -0.5j])
exact = area_computational(square)

# Green's theorem turns the area integral of 4/(1-|z|^2)^2 into a
# boundary integral.  The real part of that integral must vanish.
li = line_integral_area(square)
print(f"line integral  {li.area:.15f}  (closed form {exact:.15f}), real residual {li.real_residual:.1e}")

# Arclength of one side against 2 atanh(1/|a|).
side = square.sides[0]
print(f"side length    {arclength_numeric(side):.15f}  (closed form {side.length:.15f})")

# Monte Carlo: uniform points in the bounding box of the arcs, kept
# when the boundary winds around them.  The estimate is reproducible for
# a fixed seed regardless of how many worker threads share the chunks.
for samples in (10_000, 100_000, 1_000_000):
    mc = montecarlo_area(square, samples, seed=2024)
    z = (mc.estimate - exact) / mc.std_error
    print(f"Monte Carlo n={samples:>9,}  {mc.estimate:.5f} +- {mc.std_error:.5f}  ({z:+.2f} sigma)")
print("generator:", mc.generator)

threaded = montecarlo_area(square, 1_000_000, seed=2024, workers=4)
print("4 workers give the same estimate:", threaded.estimate == mc.estimate)

# A polygon hugging the boundary stresses the quadrature: the density
# blows up near the unit circle.
near = validate([0.97 * complex(math.cos(t), math.sin(t)) for t in (0.0, 1.3, 2.9, 4.4)])
li = line_integral_area(near)
print(f"near-boundary quadrilateral: quadrature {li.area:.12f}, closed form {area_computational(near):.12f}")
