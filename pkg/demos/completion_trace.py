"""Completion without defining equations.

Only the parameterizations of the two branches are given, so the element of
value (13, Top) is not supplied and has to be found by cancelling G-products.
The result is certified against the linear-algebra value set.
"""
from semival import complete, minimalize, reduce_chain, verify_basis, working_bound
from semival.curve import Curve
from semival.document import golden_path, load_curve

full = load_curve(golden_path("branch4613_cusp"))
bare = Curve(full.branches, full.variables, sigma=(29, 15))
bound = working_bound(bare, bare.sigma)

basis = complete(bare, bound)
print(len(basis.elements), "elements after completion")
minimal = minimalize(basis)
for g, v in zip(minimal.elements, minimal.values):
    print(bound.to_display(bound.saturate(v)), bare.format(g))

# the result is bound-conditional: its correctness rests on the supplied sigma
print("bound conditional:", minimal.bound_conditional)
print("certified:", verify_basis(minimal).ok)

# reducing x*y^2 - x^4 walks down to zero through G-products
g = bare.coordinate(0) * bare.coordinate(1) ** 2 - bare.coordinate(0) ** 4
h, trace = reduce_chain(g, minimal)
for step in trace:
    print(f"k={step.coordinate + 1} c={step.constant} exps={step.product.exponents}")
print("terminal:", bare.format(h))
