"""
Drawing geodesic polygons
=========================

Every side is either a diameter segment or an arc of a circle meeting
the unit circle at right angles.  The renderer draws each side from its
circle and colours sides by whether they bow toward the interior
(solid) or away from it (dashed).

Run with an output directory, default ``demo_svg``.
"""

import cmath
import math
import sys
from pathlib import Path

from hypergon import geodesic_circle, validate
from hypergon.svg import render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_svg")
out.mkdir(exist_ok=True)

shapes = {
    "square": [0.5, 0.5j, -0.5, -0.5j],
    "ideal_triangle": [cmath.exp(2j * math.pi * k / 3) for k in range(3)],
    "off_centre_triangle": [0.2 + 0.2j, 0.7 + 0.1j, 0.4 + 0.6j],
    "star": [(0.85 if k % 2 == 0 else 0.3) * cmath.exp(1j * math.pi * k / 5) for k in range(10)],
}
for name, verts in shapes.items():
    path = out / f"{name}.svg"
    path.write_text(render_svg(validate(verts), title=name))
    print("wrote", path)

# Orthogonality check for the ideal triangle's circles: |c|^2 = r^2 + 1.
for k in range(3):
    arc = geodesic_circle(shapes["ideal_triangle"][k], shapes["ideal_triangle"][(k + 1) % 3])
    print(f"side {k + 1}: |c|^2 - r^2 = {abs(arc.center) ** 2 - arc.radius ** 2:.15f}")
