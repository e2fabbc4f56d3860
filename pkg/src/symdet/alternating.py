"""Alternating determinantal representations, in any characteristic.

P is the determinant of an alternating matrix exactly when P is a square:
given a matrix N with det(N) = Q, the block matrix [[0, N], [-N^T, 0]]
has determinant Q^2.
"""

from __future__ import annotations

from .errors import NotASquare
from .factor import is_factor, sym_det
from .poly import Polynomial
from .symmat import PolyMatrix, det, pfaffian


def alt_build(N: PolyMatrix) -> PolyMatrix:
    """The 2n x 2n alternating matrix [[0, N], [-N^T, 0]]."""
    n = N.n
    z = Polynomial.zero(N.field, N.variables)
    rows = [[z] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            rows[i][n + j] = N[i, j]
            rows[n + j][i] = -N[i, j]
    return PolyMatrix(N.field, N.variables, rows)


def alt_representable(P: Polynomial) -> tuple[bool, Polynomial | None]:
    """(True, sqrt(P)) when P is a square, else (False, None)."""
    try:
        return True, P.sqrt()
    except NotASquare:
        return False, None


def alt_verify(M: PolyMatrix, P: Polynomial) -> bool:
    """pf(M)^2 == P and det(M) == P."""
    pf = pfaffian(M)
    return pf * pf == P and det(M) == P


def alt_witness(P: Polynomial) -> PolyMatrix | None:
    """An alternating matrix with determinant P when one can be synthesized here.

    That is: P = Q^2 with Q a single term c*x^a (N diagonal, any
    characteristic), or in characteristic 2 with Q multilinear and
    factorizable, in which case an SDR of Q is used as N.
    """
    ok, Q = alt_representable(P)
    if not ok:
        return None
    F, V = P.field, P.variables
    if len(Q) <= 1:
        if Q.is_zero:
            return alt_build(PolyMatrix(F, V, [[Q]]))
        ((mono, c),) = Q.items()
        diag = [Polynomial.constant(F, V, c)]
        for i, e in enumerate(mono):
            diag += [Polynomial.variable(F, V, i)] * e
        return alt_build(PolyMatrix.block_diag(*(PolyMatrix(F, V, [[d]]) for d in diag)))
    if F.p != 2 or not Q.is_multilinear():
        return None
    if not is_factor(Q):
        return None
    return alt_build(sym_det(Q))
