import pytest

from helpers import GF2, VARS3, poly, random_poly, rng
from symdet.errors import ContextMismatch, TooLarge, UnsupportedCharacteristic
from symdet.field import FieldSpec
from symdet.poly import Polynomial
from symdet.quotient import QuotientContext, QuotientElement, q_abs, q_mul, q_project

GF4 = FieldSpec(2, 2)


def brute_closure(ctx):
    """Products of linear elements, built level by level until nothing new appears."""
    gens = ctx.linear_elements()
    level = {g.rep for g in gens}
    seen = set(level)
    while level:
        nxt = set()
        for r in level:
            for g in gens:
                s = ctx.mul_reps(r, g.rep)
                if s not in seen:
                    nxt.add(s)
        seen |= nxt
        level = nxt
    return seen


def test_census_r111():
    ctx = QuotientContext.broadcast(GF2, VARS3, 1)
    elements = ctx.elements()
    closure = ctx.linear_closure()
    assert len(elements) == 256
    assert len({e.rep for e in elements}) == 256
    assert len(closure) == 136
    assert 256 - len(closure) == 120
    assert ctx.project(poly("x*y+z")) not in closure


def test_census_r000():
    ctx = QuotientContext.broadcast(GF2, VARS3, 0)
    assert len(ctx.linear_closure()) == 136


def test_closure_matches_level_search():
    for ell in [(1, 1, 1), (0, 1, 0)]:
        ctx = QuotientContext(GF2, VARS3, ell)
        assert {e.rep for e in ctx.linear_closure()} == brute_closure(ctx)


def test_closure_two_variables_is_everything():
    ctx = QuotientContext.broadcast(GF2, ("x", "y"), 1)
    assert len(ctx.linear_closure()) == len(ctx.elements()) == 16


def test_mul_matches_reduction_of_product():
    r = rng(2)
    for F in (GF2, GF4):
        for _ in range(50):
            ell = tuple(r.randrange(F.order) for _ in VARS3)
            ctx = QuotientContext(F, VARS3, ell)
            P = random_poly(r, F, VARS3, nterms=3, maxdeg=3)
            Q = random_poly(r, F, VARS3, nterms=3, maxdeg=3)
            lhs = ctx.project(P) * ctx.project(Q)
            assert lhs == ctx.project(P * Q)


def test_ring_axioms_sampled():
    ctx = QuotientContext(GF4, ("x", "y"), (2, 3))
    elements = ctx.elements()
    r = rng(4)
    for _ in range(200):
        a, b, c = (r.choice(elements) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_bitmask_product_rule():
    ctx = QuotientContext(GF4, VARS3, (2, 3, 1))
    xy = ctx.project(poly("x*y", GF4))
    xz = ctx.project(poly("x*z", GF4))
    # x^{ab} * x^{ac} = l_x * y * z
    assert (xy * xz).rep == poly("2*y*z", GF4)


def test_abs_examples():
    ctx = QuotientContext.broadcast(GF2, VARS3, 1)
    assert q_abs(ctx.project(poly("x+1"))).value == 0
    assert q_abs(ctx.project(poly("x"))).value == 1
    ctx4 = QuotientContext(GF4, VARS3, (2, 0, 0))
    # (x + 1)^2 = 2 + 1 = 3, |x+1| = sqrt(3) = 2
    assert q_abs(ctx4.project(poly("x+1", GF4))).value == 2


def test_abs_squares_back():
    r = rng(6)
    for _ in range(50):
        ell = tuple(r.randrange(4) for _ in VARS3)
        ctx = QuotientContext(GF4, VARS3, ell)
        coeffs = [r.randrange(4) for _ in range(4)]
        L = Polynomial.constant(GF4, VARS3, coeffs[0])
        for i in range(3):
            L = L + Polynomial.variable(GF4, VARS3, i).scale(coeffs[i + 1])
        e = ctx.project(L)
        a = e.abs()
        assert (e * e).rep == Polynomial.constant(GF4, VARS3, a * a)
        assert e.is_invertible() == bool(a)


def test_every_square_is_constant_in_char2():
    # squaring is additive, and x^(2m) reduces to a constant
    ctx = QuotientContext(GF4, ("x", "y"), (3, 2))
    for e in ctx.elements():
        assert (e * e).rep.is_constant()
    xy1 = ctx.project(poly("x*y+1", GF4, ("x", "y")))
    # (xy+1)^2 = 3*2 + 1 = 1 + 1 = 0
    assert xy1.abs().value == 0


def test_invertible_iff_unit():
    ctx = QuotientContext.broadcast(GF2, ("x", "y"), 1)
    elements = ctx.elements()
    one = ctx.one
    for a in ctx.linear_elements():
        has_inverse = any(a * b == one for b in elements)
        assert a.is_invertible() == has_inverse


def test_wrappers_and_element():
    ctx = QuotientContext.broadcast(GF2, VARS3, 1)
    a = q_project(poly("x^2+y"), ctx)
    assert a.rep == poly("y+1")
    assert q_mul(a, a).rep == poly("0")  # (y+1)^2 = y^2 + 1 = 0
    with pytest.raises(ValueError):
        ctx.element(poly("x^2"))


def test_context_checks():
    ctx = QuotientContext.broadcast(GF2, VARS3, 1)
    other = QuotientContext.broadcast(GF2, VARS3, 0)
    with pytest.raises(ContextMismatch):
        ctx.one + other.one
    with pytest.raises(ContextMismatch):
        ctx.project(Polynomial.zero(GF2, ("x",)))
    with pytest.raises(ContextMismatch):
        QuotientContext(GF2, VARS3, (1, 1))
    with pytest.raises(UnsupportedCharacteristic):
        QuotientContext.broadcast(FieldSpec(3), VARS3, 1)


def test_enumeration_budget():
    ctx = QuotientContext.broadcast(GF2, tuple(f"x{i}" for i in range(5)), 1)
    with pytest.raises(TooLarge):
        ctx.elements()
    # GF(4) with 2 variables: 4^4 elements
    assert len(QuotientContext.broadcast(GF4, ("x", "y"), 1).elements()) == 256


def test_linear_elements_count():
    ctx = QuotientContext.broadcast(GF4, ("x", "y"), 1)
    assert len(ctx.linear_elements()) == 4**3
    assert all(isinstance(e, QuotientElement) and e.is_linear() for e in ctx.linear_elements())
    assert len({e.rep for e in ctx.linear_elements()}) == 64


def test_elements_listing_order_is_deterministic():
    ctx = QuotientContext.broadcast(GF2, ("x",), 1)
    reps = [str(e) for e in ctx.elements()]
    assert reps == ["0", "x", "1", "x+1"]
