"""Tour of the discrete simplex as a metric space.

The space Delta_ell^n holds every multiset of cardinality ell over an
alphabet of n+1 symbols, written as multiplicity vectors. This script walks
through enumeration, the half-L1 metric, neighbor structure, and balls,
using the 36-point triangle Delta_7^2 as the running example.
"""

from simplexcode import (
    SimplexSpace,
    ball,
    ball_size,
    distance,
    enumerate_space,
    format_point,
    neighbors,
)

space = SimplexSpace(n=2, ell=7)
print(f"Delta_7^2 has C(9,2) = {space.size()} points")

points = list(enumerate_space(space))
print(f"first point {format_point(points[0])}, last point {format_point(points[-1])}")
print("the order is lexicographically decreasing, so it is stable across runs\n")

# The space drawn as the triangular grid it is: row k holds the points
# with last coordinate k, i.e. one horizontal slice of the triangle.
print("the triangle, rows indexed by the third coordinate:")
for k in range(space.ell, -1, -1):
    row = [p for p in points if p[2] == k]
    row.sort(reverse=True)
    indent = " " * (3 * k)
    print(indent + "  ".join(format_point(p) for p in row))
print()

x, y = (5, 0, 2), (2, 5, 0)
print(f"distance({format_point(x)}, {format_point(y)}) = {distance(x, y)}")
print(f"the diameter of the space equals ell = {space.ell}:",
      distance((7, 0, 0), (0, 7, 0)), "\n")

# Neighbors move one unit of multiplicity from one symbol to another.
interior, corner = (3, 2, 2), (7, 0, 0)
print(f"{format_point(interior)} is interior: {len(neighbors(interior))} neighbors (a hexagon)")
print(f"{format_point(corner)} is a corner: {len(neighbors(corner))} neighbors")

# Balls are hexagons clipped by the boundary.
for center in (interior, (5, 0, 2), corner):
    sizes = [ball_size(center, e) for e in range(4)]
    print(f"ball sizes around {format_point(center)} for e = 0..3: {sizes}")

print("\ninterior balls follow 3e(e+1)+1:",
      [3 * e * (e + 1) + 1 for e in range(4)])
print("set form and counted form agree:",
      all(len(ball((3, 2, 2), e)) == ball_size((3, 2, 2), e) for e in range(4)))
