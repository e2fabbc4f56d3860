"""Brute-force oracles and random generators shared by the tests."""

import itertools
import random

from symdet.field import FieldSpec
from symdet.poly import Polynomial, parse_poly
from symdet.symmat import PolyMatrix

GF2 = FieldSpec(2)
VARS3 = ("x", "y", "z")


def poly(text, field=GF2, variables=VARS3):
    return parse_poly(text, field, variables)


def perm_sign(perm):
    sign = 1
    seen = set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_permutations(M):
    """Leibniz formula, term by term."""
    n = M.n
    total = Polynomial.zero(M.field, M.variables)
    for perm in itertools.permutations(range(n)):
        term = Polynomial.constant(M.field, M.variables, 1)
        for i in range(n):
            term = term * M[i, perm[i]]
            if term.is_zero:
                break
        if term.is_zero:
            continue
        total = total + term if perm_sign(perm) == 1 else total - term
    return total


def matchings(n, edges):
    """All partial matchings (as lists of edges) of a graph on range(n)."""

    def rec(free):
        if not free:
            yield []
            return
        v = min(free)
        rest = free - {v}
        yield from rec(rest)  # v unmatched
        for u in sorted(rest):
            e = (v, u)
            if e in edges:
                for m in rec(rest - {u}):
                    yield [e] + m

    yield from rec(frozenset(range(n)))


def det_matchings(G):
    """Sum over partial matchings: squared edge weights times loops on unmatched vertices."""
    zero = Polynomial.zero(G.field, G.variables)
    total = zero
    for m in matchings(G.nvertices, set(G.edges)):
        term = Polynomial.constant(G.field, G.variables, 1)
        covered = set()
        for e in m:
            term = term * G.edges[e] * G.edges[e]
            covered.update(e)
        for v in range(G.nvertices):
            if v not in covered:
                term = term * G.loops.get(v, zero)
        total = total + term
    return total


def random_poly(rng, field, variables, nterms=3, maxdeg=2):
    terms = {}
    for _ in range(nterms):
        mono = tuple(rng.randint(0, maxdeg) for _ in variables)
        terms[mono] = rng.randrange(field.order)
    P = Polynomial(field, variables, {m: c for m, c in terms.items() if c})
    return P


def random_multilinear(rng, field, variables):
    n = len(variables)
    return Polynomial.from_masks(field, variables, {m: rng.randrange(field.order) for m in range(1 << n)})


def random_entry(rng, field, variables, general=False):
    r = rng.random()
    if r < 0.35:
        return Polynomial.constant(field, variables, rng.randrange(field.order))
    if r < 0.7 or not general:
        return Polynomial.variable(field, variables, rng.randrange(len(variables)))
    return random_poly(rng, field, variables, nterms=2, maxdeg=1)


def random_symmetric(rng, field, variables, n, general=False):
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = random_entry(rng, field, variables, general)
    return PolyMatrix(field, variables, rows)


def random_square(rng, field, variables, n, general=False):
    return PolyMatrix(field, variables, [[random_entry(rng, field, variables, general) for _ in range(n)] for _ in range(n)])


def random_alternating(rng, field, variables, n):
    z = Polynomial.zero(field, variables)
    rows = [[z] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = random_entry(rng, field, variables, general=True)
            rows[i][j] = e
            rows[j][i] = -e
    return PolyMatrix(field, variables, rows)


def all_multilinear(field, variables):
    n = len(variables)
    q = field.order
    for coeffs in itertools.product(range(q), repeat=1 << n):
        yield Polynomial.from_masks(field, variables, {m: c for m, c in enumerate(coeffs) if c})


def rng(seed=0):
    return random.Random(seed)
