"""Half-open cones, fundamental parallelepipeds, and their transforms.

The five-dimensional cone below captures all rank vectors of three-run paths
falling in one region of the bounce case split; its fundamental
parallelepiped holds two lattice points, so its generating function has a
two-term numerator over one factor per generator.
"""

from qtcatalan import (
    HalfOpenCone,
    VariableContext,
    integer_point_transform,
    lattice_index,
    parallelepiped_points,
    series_expand,
)

cone = HalfOpenCone(
    dim=5,
    apex=(0, 0, 0, 0, 0),
    generators=(
        (1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (1, 1, 0, 1, 0),
        (1, 0, 0, 1, 1),
        (0, 1, 0, 0, 1),
    ),
    open_flags=(False, False, False, True, True),
)

print(f"lattice index: {lattice_index(cone)}")
print(f"parallelepiped points: {parallelepiped_points(cone)}")

ctx = VariableContext(("z1", "z2", "z3", "w2", "w3"))
gf = integer_point_transform(cone, ctx)
print(f"numerator: {gf.numerator}")
print("denominator factors (exponent vectors):")
for factor in gf.denominator:
    print(f"  1 - z^{factor}")

print()
print("Series expansion enumerates the cone's integer points by total weight:")
weights = {name: 1 for name in ctx.names}
for bound in (4, 6, 8):
    series = series_expand(gf, weights, bound)
    print(f"  weight <= {bound}: {len(series.terms)} lattice points")
