"""A branch with semigroup <4,6,13> meeting the cusp y^2 = x^3.

Walks through the invariants: branch semigroups, intersection multiplicity,
conductor, minimal Standard Basis, and the finite absolute points, whose
number equals the intersection multiplicity.
"""
from semival import analysis, load_curve, run
from semival.document import golden_path

curve = load_curve(golden_path("branch4613_cusp"))
for i, f in enumerate(curve.plane_polys, start=1):
    print(f"f{i} =", curve.format(f))

r = run(curve)
for i, s in enumerate(r.semigroups, start=1):
    print(f"branch {i}: generators {s.generators}, conductor {s.conductor}")

I = analysis.intersection_multiplicity(curve, 0, 1)
print("I(f1, f2) =", I)
print("sigma =", r.conductor.sigma, f"({r.conductor.provenance})")

print("minimal basis:")
for g, v in zip(r.minimal.elements, r.minimal.values):
    print("  ", v, curve.format(g))

absolute = analysis.absolute_points(r.points, r.bound)
finite = sorted(analysis.finite_points(absolute, r.bound))
print("finite absolute points:", finite)
print("count", len(finite), "== I:", len(finite) == I)

# the staircase: finite points of S below the conductor, one row per value on branch 2
S = sorted(analysis.finite_points(r.points, r.bound), key=lambda p: (p[1], p[0]))
for d in range(r.bound.bounds[1]):
    row = [p[0] for p in S if p[1] == d]
    if row:
        print(f"{d:3d} |", " ".join(map(str, row)))
