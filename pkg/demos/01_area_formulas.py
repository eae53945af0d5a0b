"""
Five ways to measure a hyperbolic polygon
=========================================

A geodesic polygon in the Poincare disk has one area, but several
closed forms compute it from different data: signed vertex products,
arc angles of the sides, the angle defect, a complex identity that
also yields the perimeter, and a sum of arguments whose constant
depends on where the origin sits.  This script runs all of them on a
few shapes and shows they agree.
"""

import cmath
import math

from hypergon import (
    MobiusIsometry,
    area_classical,
    area_computational,
    area_geometric,
    area_perimeter_identity,
    area_report,
    area_winding,
    classify_side,
    interior_angles,
    perimeter,
    validate,
)

# The test square has its vertices on the axes at distance 1/2.  Its
# sides bow toward the centre, so it is "thinner" than the Euclidean one.
square = validate([0.5, 0.5j, -0.5, -0.5j])

print("square")
print("  computational ", area_computational(square))
print("  geometric     ", area_geometric(square))
print("  angle defect  ", area_classical(square))
print("  A + iP        ", area_perimeter_identity(square))
print("  winding       ", area_winding(square))
print("  closed form    8 atan(1/4) =", 8 * math.atan(0.25))
print("  perimeter     ", perimeter(square))

# Each interior angle is smaller than the Euclidean right angle.  The
# deficit, summed, is the area.
angles = interior_angles(square).interior
print("  interior angles (deg)", [round(math.degrees(a), 4) for a in angles])

# Pushing the vertices to the unit circle gives an ideal polygon: every
# angle is zero, every side infinitely long, and the area is pi (n - 2).
for n in (3, 4, 7):
    ideal = validate([cmath.exp(2j * math.pi * k / n) for k in range(n)])
    print(f"ideal {n}-gon: area {area_computational(ideal):.15f}  pi(n-2) {math.pi * (n - 2):.15f}"
          f"  perimeter {perimeter(ideal)}")

# A triangle off to one side has the origin outside; the sides facing
# the origin bow outward and enter the geometric formula with a minus sign.
tri = validate([0.2 + 0.2j, 0.7 + 0.1j, 0.4 + 0.6j])
print("off-centre triangle sides:", [classify_side(tri, k).kind.value for k in range(tri.n)])
print(f"  area {area_computational(tri):.15f} geometric {area_geometric(tri):.15f}"
      f" winding {area_winding(tri):.15f}")

# Areas and perimeters do not change under disk isometries.
moved = square.transformed(MobiusIsometry(0.3 - 0.4j, 1.1))
print("square after an isometry: area", area_computational(moved), "perimeter", perimeter(moved))

# area_report runs every formula whose preconditions hold and records
# the spread between them.
rep = area_report(square)
print(f"report: spread {rep.max_pairwise_discrepancy:.1e}, agrees={rep.agrees}, skipped={rep.skipped}")
