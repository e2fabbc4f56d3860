"""Acceptance criteria 1-10; the summary prints one PASS/FAIL line per criterion."""

import time

import pytest
from sympy import GF as SymGF
from sympy import symbols
from sympy.polys.matrices import DomainMatrix

from helpers import (
    GF2,
    VARS3,
    all_multilinear,
    det_matchings,
    det_permutations,
    poly,
    random_alternating,
    random_multilinear,
    random_poly,
    random_square,
    random_symmetric,
    rng,
)
from symdet.alternating import alt_build, alt_representable
from symdet.extract import extract_factorization
from symdet.factor import is_factor, sym_det
from symdet.field import FieldSpec, fe_enumerate, fe_sqrt
from symdet.gadgets import (
    GsdrMatrix,
    QuadraticForm,
    WeightedGraph,
    gadget_replace_edge,
    gadget_square,
    gadget_wheel,
    gsdr_to_sdr,
    linear_sdr,
)
from symdet.poly import Polynomial
from symdet.quotient import QuotientContext, q_mul
from symdet.symmat import SdrMatrix, det, det_involution, det_subset, pfaffian

GF3 = FieldSpec(3)
GF4 = FieldSpec(2, 2)
GF16 = FieldSpec(2, 4)

INTRO = [["x", 0, 0, 1], [0, "y", 0, 1], [0, 0, "z", 1], [1, 1, 1, 0]]
P_INTRO = "x*y+y*z+z*x"


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return result, best


def factorizable_m3():
    return [P for P in all_multilinear(GF2, VARS3) if is_factor(P)]


# -- 1 -------------------------------------------------------------------


@pytest.mark.criterion(1, "intro 4x4 determinant is xy+yz+zx; both routines agree; < 1 ms")
def test_criterion_1_intro_matrix():
    A = SdrMatrix.from_entries(GF2, VARS3, INTRO)
    expected = poly(P_INTRO)
    d_inv, t_inv = best_of(lambda: det_involution(A), 50)
    d_sub, t_sub = best_of(lambda: det_subset(A), 50)
    d_elim, t_elim = best_of(lambda: det(A), 50)
    assert d_inv == d_sub == d_elim == expected
    assert det_permutations(A) == expected
    assert max(t_inv, t_sub, t_elim) < 1e-3, (t_inv, t_sub, t_elim)


# -- 2 -------------------------------------------------------------------


@pytest.mark.criterion(2, "R(1,1,1) census: 256 elements, 136 in the linear closure, 120 outside; < 5 s")
def test_criterion_2_census():
    def census():
        ctx = QuotientContext.broadcast(GF2, VARS3, 1)
        elements = ctx.elements()
        closure = {e.rep for e in ctx.linear_closure()}
        return ctx, elements, closure

    (ctx, elements, closure), elapsed = best_of(census, 1)
    assert len(elements) == 256
    assert len(closure) == 136
    assert sum(1 for e in elements if e.rep not in closure) == 120
    assert ctx.project(poly("x*y+z")).rep not in closure
    assert elapsed < 5, elapsed


# -- 3 -------------------------------------------------------------------


@pytest.mark.criterion(3, "is_factor agrees with the closure oracle on all 256 (m=3) and all 16 (m=2); < 10 s")
def test_criterion_3_oracle_equivalence():
    def check():
        ctx = QuotientContext.broadcast(GF2, VARS3, 1)
        closure = {e.rep for e in ctx.linear_closure()}
        polys = list(all_multilinear(GF2, VARS3))
        bad = [P for P in polys if is_factor(P) != (P in closure)]
        two = list(all_multilinear(GF2, ("x", "y")))
        return polys, bad, two, [P for P in two if not is_factor(P)]

    (polys, bad, two, bad2), elapsed = best_of(check, 1)
    assert len(polys) == 256 and not bad
    assert len(two) == 16 and not bad2
    assert elapsed < 10, elapsed


# -- 4 -------------------------------------------------------------------


_SX = symbols("x y z")
_SRING = SymGF(2)[_SX]


def _to_sympy(P):
    expr = 0
    for mono, c in P.items():
        term = c
        for s, e in zip(_SX, mono):
            term *= s**e
        expr += term
    return _SRING.from_sympy(expr) if P else _SRING.zero


def _sympy_det(M):
    D = DomainMatrix([[_to_sympy(M[i, j]) for j in range(M.n)] for i in range(M.n)], (M.n, M.n), _SRING)
    return D.det()


@pytest.mark.criterion(4, "sym_det round trip: det of the synthesized SDR equals P for every factorizable P; < 60 s")
def test_criterion_4_round_trip():
    polys = factorizable_m3()
    assert len(polys) == 136

    def synth():
        out = []
        for P in polys:
            M = sym_det(P)
            out.append((P, M, det(M)))
        return out

    results, elapsed = best_of(synth, 1)
    for P, M, d in results:
        assert M.is_sdr() and d == P, P
    assert elapsed < 60, elapsed
    # independent oracle: fraction-free determinant over GF(2)[x,y,z]
    for P, M, _ in results:
        assert _sympy_det(M) == _to_sympy(P), P


# -- 5 -------------------------------------------------------------------


@pytest.mark.criterion(5, "extraction multiplies back to pi(P) at ell=0 and ell=1; linear factors; <= 2n iterations")
def test_criterion_5_extraction():
    for value in (0, 1):
        ctx = QuotientContext.broadcast(GF2, VARS3, value)
        for P in factorizable_m3():
            M = sym_det(P)
            R = extract_factorization(M, ctx)
            prod = ctx.element(Polynomial.constant(GF2, VARS3, R.constant.value))
            for t in R.factors:
                prod = q_mul(prod, t)
            assert prod == ctx.project(P), (P, value)
            assert all(t.rep.is_linear() for t in R.factors)
            assert R.iterations <= 2 * M.n


@pytest.mark.criterion(5, "extraction multiplies back to pi(P) at ell=0 and ell=1; linear factors; <= 2n iterations")
def test_criterion_5_worked_congruences():
    c0 = QuotientContext.broadcast(GF2, VARS3, 0)
    c1 = QuotientContext.broadcast(GF2, VARS3, 1)
    P = poly(P_INTRO)
    assert c0.project(P) == q_mul(c0.project(poly("x+y")), c0.project(poly("x+z")))
    assert c1.project(P) == q_mul(c1.project(poly("x*y*z")), c1.project(poly("x+y+z")))


# -- 6 -------------------------------------------------------------------

_CASES = 200


def _gadget_suite():
    r = rng(60)
    for _ in range(_CASES):
        field = r.choice([GF2, GF4])
        P = random_poly(r, field, VARS3, nterms=3, maxdeg=2)
        S = gadget_square(P)
        G = S.graph
        assert G.det() == P * P
        inner = G.remove_vertices([S.s, S.t]).det()
        assert inner == Polynomial.constant(field, VARS3, 1)
        assert G.remove_vertices([S.s]).det().is_zero
        assert G.remove_vertices([S.t]).det().is_zero

    for _ in range(_CASES):
        field = r.choice([GF2, GF4])
        lam = [r.randrange(field.order) for _ in range(4)]
        expected = Polynomial.constant(field, VARS3, field.mul(lam[0], lam[0]))
        for i in range(3):
            expected = expected + Polynomial.variable(field, VARS3, i).scale(field.mul(lam[i + 1], lam[i + 1]))
        assert det(gadget_wheel(field, VARS3, lam)) == expected

    done = 0
    while done < _CASES:
        A = random_symmetric(r, GF2, VARS3, r.randint(2, 5), general=True)
        G = WeightedGraph.from_matrix(A)
        if not G.edges:
            continue
        u, v = r.choice(sorted(G.edges))
        P = random_poly(r, GF2, VARS3, nterms=2, maxdeg=2)
        H = gadget_replace_edge(G, (u, v), gadget_square(P))
        rest = G.remove_vertices([u, v])
        assert H.det() == G.without_edge(u, v).det() + P * P * rest.det()
        assert det_matchings(G) == G.det()
        done += 1

    for _ in range(_CASES):
        field = r.choice([GF2, GF4])
        n = r.randint(1, 2)
        off = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                off[i][j] = off[j][i] = random_poly(r, field, VARS3, nterms=2, maxdeg=2)
        diag = []
        for _ in range(n):
            if r.random() < 0.3:
                diag.append(Polynomial.constant(field, VARS3, r.randrange(field.order)))
            else:
                diag.append(QuadraticForm(tuple(random_poly(r, field, VARS3, nterms=2, maxdeg=1) for _ in range(4))))
        A = GsdrMatrix(field, VARS3, off, diag)
        S = gsdr_to_sdr(A)
        assert S.is_sdr() and det(S) == A.det()


@pytest.mark.criterion(6, "gadget contracts over 200 random cases each; < 30 s")
def test_criterion_6_gadgets():
    _, elapsed = best_of(_gadget_suite, 1)
    assert elapsed < 30, elapsed


# -- 7 -------------------------------------------------------------------


@pytest.mark.criterion(7, "Mult_0(x^2y+z^3+xz+y) = xz+y and Mult_1 = z+xz")
def test_criterion_7_mult():
    P = poly("x^2*y+z^3+x*z+y")
    assert P.mult_reduce((0, 0, 0)) == poly("x*z+y")
    assert P.mult_reduce((1, 1, 1)) == poly("z+x*z")


# -- 8 -------------------------------------------------------------------


def _alternating_suite():
    r = rng(80)
    for field in (GF2, GF3):
        for k in range(100):
            A = random_alternating(r, field, VARS3, (2, 4, 6)[k % 3])
            pf = pfaffian(A)
            assert pf * pf == det(A) == det_subset(A)
        for _ in range(40):
            N = random_square(r, field, VARS3, r.randint(1, 4), general=True)
            d = det_permutations(N)
            assert det(alt_build(N)) == d * d
    for Q in all_multilinear(GF2, VARS3):
        ok, root = alt_representable(Q * Q)
        assert ok and root == Q
        # every coefficient of GF(2) is a square: exponents decide
        even = all(e % 2 == 0 for m, _ in Q.items() for e in m)
        assert alt_representable(Q)[0] == even
        assert alt_representable(Q * Q + poly("x"))[0] is False
    for Q in all_multilinear(GF3, ("x", "y")):
        ok, root = alt_representable(Q * Q)
        assert ok and (root == Q or root == -Q)


@pytest.mark.criterion(8, "pf^2 = det on random alternating matrices; det(alt_build N) = det(N)^2; square criterion; < 30 s")
def test_criterion_8_alternating():
    _, elapsed = best_of(_alternating_suite, 1)
    assert elapsed < 30, elapsed


# -- 9 -------------------------------------------------------------------


@pytest.mark.criterion(9, "det_involution = det_subset on 500 random symmetric char-2 matrices, n <= 7")
def test_criterion_9_cross_oracle():
    r = rng(90)
    for _ in range(500):
        A = random_symmetric(r, GF2, VARS3, r.randint(1, 7), general=True)
        assert det_involution(A) == det_subset(A)


# -- 10 ------------------------------------------------------------------


@pytest.mark.criterion(10, "GF(4) linear_sdr and sym_det verify on 50 random factorizable polynomials; sqrt(a^2) = a on GF(16)")
def test_criterion_10_extension_fields():
    r = rng(100)
    done = 0
    while done < 50:
        V = ("x", "y")[: r.randint(1, 2)]
        P = random_multilinear(r, GF4, V)
        if not is_factor(P):
            continue
        M = sym_det(P)
        assert M.is_sdr() and det(M) == P
        L = Polynomial.constant(GF4, V, r.randrange(4))
        for i in range(len(V)):
            L = L + Polynomial.variable(GF4, V, i).scale(r.randrange(4))
        S = linear_sdr(L)
        assert S.is_sdr() and det(S) == L
        done += 1
    for a in fe_enumerate(GF16):
        assert fe_sqrt(a * a) == a
