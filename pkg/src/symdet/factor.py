"""Factorizability of multilinear polynomials in characteristic 2, and SDR synthesis.

A multilinear P is factorizable when P = Mult_l(L_1 ... L_k) for linear
L_i and some squares l.  :func:`is_factor_traced` decides this while recording
pairs (L, b) such that P_i = Mult_b(L_i * P_{i+1}); :func:`sym_det` replays
the trace with :func:`merge` to build an SDR of P.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidEntry, NotRepresentable, UnsupportedCharacteristic
from .gadgets import linear_sdr
from .poly import Polynomial, graded_key
from .quotient import QuotientContext
from .symmat import PolyMatrix, SdrMatrix, clean, dedup_diagonal, project


@dataclass(frozen=True)
class FactorTrace:
    steps: tuple  # of (Polynomial, int)
    terminal: Polynomial

    def replay(self) -> Polynomial:
        P = self.terminal
        for L, b in reversed(self.steps):
            P = _mult(L * P, b)
        return P

    def format(self) -> str:
        lines = [f"({L}, {b})" for L, b in self.steps]
        lines.append(f"terminal {self.terminal}")
        return "\n".join(lines)


def _mult(P: Polynomial, b: int) -> Polynomial:
    return P.mult_reduce((b,) * P.nvars)


def _check(P: Polynomial):
    if P.field.p != 2:
        raise UnsupportedCharacteristic("factorizability is a characteristic-2 notion")
    if not P.is_multilinear():
        raise InvalidEntry(f"{P} is not multilinear")


def _monomial(P: Polynomial, vars_: tuple) -> Polynomial:
    mono = tuple(1 if i in vars_ else 0 for i in range(P.nvars))
    return Polynomial(P.field, P.variables, {mono: 1})


def _missing_monomial(P: Polynomial) -> tuple:
    # graded-minimal multilinear monomial over the support with zero coefficient
    supp = P.support()
    for d in range(len(supp) + 1):
        cands = [tuple(1 if i in c else 0 for i in range(P.nvars)) for c in combinations(supp, d)]
        for mono in sorted(cands, key=graded_key):
            if not P.coeff(mono):
                return tuple(i for i, e in enumerate(mono) if e)
    raise AssertionError("called on a full polynomial")


def prep(P: Polynomial, steps: list | None = None) -> Polynomial:
    """Reduce P to a linear polynomial or one of valuation 1, logging inverse steps.

    Appends to ``steps`` pairs (L, b) with P_before = Mult_b(L * P_after).
    """
    _check(P)
    if steps is None:
        steps = []
    F = P.field
    while not P.is_linear():
        if P.is_full():
            i = P.support()[0]
            x_i = Polynomial.variable(F, P.variables, i)
            p0 = P.constant_term()
            p_i = P.coeff(tuple(1 if j == i else 0 for j in range(P.nvars)))
            L = x_i.scale(p_i) + p0
            # Mult_0(L * Mult_0(P * L)) = p0^2 * P
            steps.append((L.scale((p0 * p0).inverse()), 0))
            P = _mult(P * L, 0)
            continue
        v = P.valuation()
        if v == 0:
            alpha = _missing_monomial(P)
        elif v > 1:
            beta = min((m for m, _ in P.items()), key=graded_key)
            alpha = tuple(i for i, e in enumerate(beta) if e)[:-1]
        else:
            break
        xa = _monomial(P, alpha)
        steps.append((xa, 1))
        return _mult(xa * P, 1)
    return P


def is_factor_traced(P: Polynomial) -> FactorTrace | None:
    """The factor trace of P, or None when P is not factorizable."""
    _check(P)
    steps: list = []
    while True:
        P = prep(P, steps)
        if P.is_linear():
            return FactorTrace(tuple(steps), P)
        lin = P.linear_part()
        i = next(i for i in range(P.nvars) if lin.coeff(tuple(1 if j == i else 0 for j in range(P.nvars))))
        alpha = lin.coeff(tuple(1 if j == i else 0 for j in range(P.nvars)))
        P0 = P.partial(i)
        L = lin.scale(alpha.inverse())
        if P != _mult(L * P0, 0):
            return None
        steps.append((L, 0))
        P = P0


def is_factor(P: Polynomial) -> bool:
    return is_factor_traced(P) is not None


def merge(MP: PolyMatrix, MQ: PolyMatrix, b: int) -> SdrMatrix:
    """An SDR of Mult_b(det(MP) * det(MQ)), assuming both determinants multilinear."""
    N = dedup_diagonal(PolyMatrix.block_diag(MP, MQ))
    ctx = QuotientContext.broadcast(N.field, N.variables, b)
    A = clean(project(N, ctx))
    return SdrMatrix.of(A.lift())


def step_sdr(L: Polynomial) -> SdrMatrix:
    """SDR of one trace factor: a linear form or a multilinear monomial."""
    F, V = L.field, L.variables
    if L.is_constant() or L.is_variable():
        return SdrMatrix(F, V, [[L]])
    if L.is_linear():
        return linear_sdr(L)
    (mono,) = L.terms
    diag = [Polynomial.variable(F, V, i) for i, e in enumerate(mono) if e]
    return SdrMatrix.of(PolyMatrix.block_diag(*(PolyMatrix(F, V, [[x]]) for x in diag)))


def sym_det(P: Polynomial) -> SdrMatrix:
    """An SDR of the multilinear polynomial P; raises NotRepresentable if none exists."""
    _check(P)
    if P.is_constant():
        return SdrMatrix(P.field, P.variables, [[P]])
    trace = is_factor_traced(P)
    if trace is None:
        raise NotRepresentable(f"{P} is not factorizable, so it has no SDR")
    M = step_sdr(trace.terminal)
    for L, b in reversed(trace.steps):
        M = merge(step_sdr(L), M, b)
    return M
