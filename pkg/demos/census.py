"""Which elements of R(1,1,1) are products of linear elements?"""

# %%
from symdet import FieldSpec, QuotientContext, is_factor

ctx = QuotientContext.broadcast(FieldSpec(2), ("x", "y", "z"), 1)
elements = ctx.elements()
closure = {e.rep for e in ctx.linear_closure()}
print(f"{len(elements)} elements, {len(closure)} products of linear factors")

# %%
# the closed-form decision procedure reaches the same verdict on every element
agree = all(is_factor(e.rep) == (e.rep in closure) for e in elements)
print("is_factor agrees with the closure:", agree)

# %%
outside = sorted((e.rep for e in elements if e.rep not in closure), key=str)
print("a few non-factorizable elements:", ", ".join(str(P) for P in outside[:8]))
