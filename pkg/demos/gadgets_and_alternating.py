"""Graph gadgets for squares, and alternating representations of squares."""

# %%
from symdet import FieldSpec, alt_witness, det, gadget_square, gadget_wheel, parse_poly, pfaffian

F = FieldSpec(2)
P = parse_poly("x*y+z+1", F)
S = gadget_square(P)
G = S.graph
print(f"square gadget: {G.nvertices} vertices, det = {G.det()}")
print("det without s and t:", G.remove_vertices([S.s, S.t]).det())

# %%
W = gadget_wheel(F, ("x", "y"), [1, 1, 0])
print("wheel with spokes (1, 1, 0):", det(W))

# %%
GF3 = FieldSpec(3)
A = alt_witness(parse_poly("x^2*y^2", GF3))
print(f"alternating witness of x^2*y^2 over GF(3): {A.n}x{A.n}")
print("pf(A) =", pfaffian(A), " det(A) =", det(A))
