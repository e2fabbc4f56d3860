"""Tour of the arithmetic layer: finite fields, polynomials, and the rings R(ell)."""

# %%
from symdet import FieldElement, FieldSpec, QuotientContext, parse_poly

F = FieldSpec(2)
GF4 = FieldSpec(2, 2)
print("GF(4) elements:", [str(a) for a in GF4.elements()])
a, b = FieldElement(GF4, 2), FieldElement(GF4, 3)
print("2 * 3 =", a * b, " sqrt(3) =", b.sqrt())

# %%
# Mult_ell replaces every x_i^2 by ell_i
P = parse_poly("x^2*y+z^3+x*z+y", F)
print("P =", P)
print("Mult_0(P) =", P.mult_reduce((0, 0, 0)))
print("Mult_1(P) =", P.mult_reduce((1, 1, 1)))

# %%
# In R(1,1,1) every element is represented by a multilinear polynomial
ctx = QuotientContext.broadcast(F, ("x", "y", "z"), 1)
e = ctx.project(parse_poly("x+y+1", F, ctx.variables))
print("(x+y+1)^2 in R(1,1,1) =", e * e, " |x+y+1| =", e.abs())
