"""Build a symmetric determinantal representation, then read factors back off it."""

# %%
from symdet import FieldSpec, QuotientContext, det, extract_factorization, is_factor_traced, parse_poly, sym_det

F = FieldSpec(2)
P = parse_poly("x*y+y*z+z*x", F)
trace = is_factor_traced(P)
print("factor trace of", P)
print(trace.format())

# %%
M = sym_det(P)
print(f"SDR of size {M.n}x{M.n}; det(M) == P: {det(M) == P}")

# %%
for value in (0, 1):
    ctx = QuotientContext.broadcast(F, P.variables, value)
    R = extract_factorization(M, ctx)
    print(f"ell = {value}: {R}  ({R.iterations} steps, verified {R.verify(P)})")

# %%
# xy+z has no SDR
print("x*y+z factorizable:", is_factor_traced(parse_poly("x*y+z", F)) is not None)
