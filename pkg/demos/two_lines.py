"""Two transverse lines xy = 0: the smallest curve with two branches."""
from semival import analysis, load_curve, run
from semival.document import golden_path
from semival.values import check_properties

curve = load_curve(golden_path("xy"))
r = run(curve)

# x vanishes on the second line and y on the first, so each value has an infinite entry
for g, v in zip(r.minimal.elements, r.minimal.values):
    print(curve.format(g), v)

# conductor (1, 1): every pair of positive values is attained
print("sigma", r.conductor.sigma, "bound", r.bound.bounds)
print("points", [r.bound.to_display(p) for p in sorted(r.points)])

# x + y reaches (1, 1), the minimum of the two generators
print("absolute", sorted(analysis.absolute_points(r.points, r.bound)))
print("irreducible", sorted(analysis.irreducible_points(r.points, r.bound)))
print("violations", check_properties(r.points, r.bound))
