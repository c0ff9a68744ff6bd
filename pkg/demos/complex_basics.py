"""Walk through the exterior complex C(4) at p = 7.

Builds generators, applies the differential, checks d o d = 0 on a product,
and lists a bidegree basis together with its duals.
"""
from chromverify.exterior import (
    ComplexParams, basis_in_bidegree, diff, format_element, format_monomial,
    multiply, parse_element, star, top_class,
)

params = ComplexParams(7, 4)
print(f"p={params.p} n={params.n} q_n={params.qn}")

for name in ("h1,0", "h2,0", "h3,1", "h4,2"):
    x = parse_element(params, name)
    print(f"d({name}) = {format_element(diff(params, x))}")

x = multiply(params, parse_element(params, "h3,0"), parse_element(params, "h4,1"))
print("x  =", format_element(x))
print("dx =", format_element(diff(params, x)))
print("ddx is zero:", diff(params, diff(params, x)) == 0)

basis = basis_in_bidegree(params, 3, -12)
print(f"\nC^(3,-12) has dimension {len(basis)}")
for m in basis[:5]:
    comp, sign = star(params, m)
    print(f"  {format_monomial(m):<18} star -> {'+' if sign > 0 else '-'}{format_monomial(comp)}")
print("top class:", format_monomial(top_class(params)))
