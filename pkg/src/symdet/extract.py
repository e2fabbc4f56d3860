"""Factor the projection of a determinant into linear elements of R(l^2).

Starting from an SDR (or gSDR) M of P, the projected matrix is reduced by
symmetric congruences: an invertible diagonal pivot is isolated and split
off; if no pivot is invertible, a bordering trick manufactures one at the
cost of one extra linear factor; when neither applies, what is left is a
diagonal part times a constant block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidEntry, UnsupportedCharacteristic
from .field import FieldElement
from .gadgets import GsdrMatrix
from .poly import Polynomial
from .quotient import QuotientContext, QuotientElement
from .symmat import PolyMatrix, clean, det_constant, isolate, project


@dataclass(frozen=True)
class RingFactorization:
    ctx: QuotientContext
    constant: FieldElement
    factors: tuple
    iterations: int = 0

    def product(self) -> QuotientElement:
        acc = self.ctx.constant(self.constant)
        for t in self.factors:
            acc = acc * t
        return acc

    def verify(self, P: Polynomial) -> bool:
        """True when the factors multiply to the projection of P."""
        ok = all(t.is_linear() for t in self.factors)
        return ok and self.product() == self.ctx.project(P)

    def __str__(self):
        parts = [str(self.constant)] if self.constant.value != 1 or not self.factors else []
        parts += [f"({t})" for t in self.factors]
        return "*".join(parts)


def _abs(ctx, e: Polynomial) -> FieldElement:
    return QuotientElement(ctx, e).abs()


def _border(A: PolyMatrix, i: int) -> PolyMatrix:
    # index n is the border: B[n][n] = 1, B[n][i] = 1, B[i][i] = A[i][i] + 1
    ctx = A.ctx
    n = A.n
    z = Polynomial.zero(A.field, A.variables)
    one = Polynomial.constant(A.field, A.variables, 1)
    rows = [list(r) + [z] for r in A.rows] + [[z] * (n + 1)]
    rows[n][n] = one
    rows[n][i] = rows[i][n] = one
    rows[i][i] = ctx.reduce(rows[i][i] + one)
    return PolyMatrix(A.field, A.variables, rows, ctx)


def extract_factorization(M, ctx: QuotientContext) -> RingFactorization:
    """Return constant and linear factors whose product is the projection of det(M).

    ``M`` is a symmetric PolyMatrix/SdrMatrix with linear diagonal, or a
    :class:`GsdrMatrix`; ``ctx`` is the quotient R(l^2).
    """
    if ctx.field.p != 2:
        raise UnsupportedCharacteristic("extraction works in characteristic 2")
    if isinstance(M, GsdrMatrix):
        M = M.to_poly_matrix()
    A = project(M, ctx)
    if not A.is_ring_gsdr:
        raise InvalidEntry("projected diagonal entries must be linear")
    A = clean(A)
    F = ctx.field
    constant = 1
    factors: list[QuotientElement] = []
    iterations = 0

    def emit(e: Polynomial):
        nonlocal constant
        if e.is_constant():
            constant = F.mul(constant, e.constant_term().value)
        else:
            factors.append(QuotientElement(ctx, e))

    while A.n:
        iterations += 1
        n = A.n
        pivot = next((i for i in range(n) if _abs(ctx, A[i, i])), None)
        if pivot is not None:
            A = isolate(A, pivot)
            emit(A[pivot, pivot])
            A = A.delete(pivot)
            continue
        i = next(
            (i for i in range(n) if A[i, i] and any(A[i, j] for j in range(n) if j != i)),
            None,
        )
        if i is not None:
            B = isolate(_border(A, i), i)
            emit(B[i, i])
            B = B.delete(i)
            # the border row takes over position i
            order = list(range(n - 1))
            order.insert(i, n - 1)
            A = B.submatrix(order)
            continue
        zero_diag = []
        for k in range(n):
            if A[k, k]:
                emit(A[k, k])
            else:
                zero_diag.append(k)
        if zero_diag:
            constant = F.mul(constant, det_constant(A.submatrix(zero_diag).lift()).value)
        break
    if constant == 0:
        factors = []
    return RingFactorization(ctx, FieldElement(F, constant), tuple(factors), iterations)
