"""Square matrices over F[x] and over the quotient rings R(l).

Determinants come in three flavours that are deliberately independent:

* :func:`det_involution` sums over involutions (symmetric matrices,
  characteristic 2 only);
* :func:`det_subset` is the signed Laplace expansion memoized over column
  subsets, valid in any characteristic;
* :func:`det` eliminates on constant pivots and hands the (small) residual
  to :func:`det_subset`; this is the one that scales.

The congruence transformations :func:`clean`, :func:`add_multiple`,
:func:`isolate` act on matrices whose entries are quotient representatives
(``A.ctx`` set), :func:`dedup_diagonal` acts over F[x].
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    ContextMismatch,
    InvalidEntry,
    NonInvertiblePivot,
    NotAlternating,
    TooLarge,
    UnsupportedCharacteristic,
)
from .field import FieldElement, FieldSpec
from .poly import Polynomial, parse_poly
from .quotient import QuotientContext, QuotientElement

INVOLUTION_LIMIT = 10
SUBSET_LIMIT = 16
PFAFFIAN_LIMIT = 12


class PolyMatrix:
    """An immutable n x n matrix of polynomials sharing one field and variable tuple."""

    def __init__(self, field: FieldSpec, variables: Sequence[str], rows, ctx: QuotientContext | None = None):
        self.field = field
        self.variables = tuple(variables)
        self.ctx = ctx
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for e in r:
                if not isinstance(e, Polynomial) or e.field != field or e.variables != self.variables:
                    raise ContextMismatch(f"entry {e!r} does not belong to the matrix ring")
        if ctx is not None and (ctx.field != field or ctx.variables != self.variables):
            raise ContextMismatch("quotient context does not match the matrix ring")
        self.rows = rows

    @classmethod
    def from_entries(cls, field: FieldSpec, variables: Sequence[str], entries, ctx=None):
        """Entries may be field literals, FieldElements, variable names, polynomial strings or Polynomials."""
        variables = tuple(variables)

        def conv(e):
            if isinstance(e, Polynomial):
                return e
            if isinstance(e, (int, FieldElement)):
                return Polynomial.constant(field, variables, e)
            if isinstance(e, str):
                return parse_poly(e, field, variables)
            raise TypeError(f"cannot convert {e!r} to a matrix entry")

        return cls(field, variables, [[conv(e) for e in row] for row in entries], ctx)

    @classmethod
    def zeros(cls, field, variables, n, ctx=None):
        z = Polynomial.zero(field, variables)
        return cls(field, variables, [[z] * n for _ in range(n)], ctx)

    @classmethod
    def block_diag(cls, *blocks: "PolyMatrix") -> "PolyMatrix":
        if not blocks:
            raise ValueError("need at least one block")
        first = blocks[0]
        for b in blocks[1:]:
            if b.field != first.field or b.variables != first.variables:
                raise ContextMismatch("blocks belong to different rings")
        n = sum(b.n for b in blocks)
        z = Polynomial.zero(first.field, first.variables)
        rows = [[z] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.n):
                for j in range(b.n):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.n
        return cls(first.field, first.variables, rows)

    def _like(self, rows, ctx="keep"):
        return PolyMatrix(self.field, self.variables, rows, self.ctx if ctx == "keep" else ctx)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> list[list[Polynomial]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.field, self.variables, self.rows, self.ctx) == (
            other.field,
            other.variables,
            other.rows,
            other.ctx,
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.rows))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def is_alternating(self) -> bool:
        n = self.n
        return all(self.rows[i][i].is_zero for i in range(n)) and all(
            self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i)
        )

    def is_sdr(self) -> bool:
        """Symmetric with every entry a constant or a bare variable."""
        return self.is_symmetric() and all(e.is_constant() or e.is_variable() for r in self.rows for e in r)

    def is_constant(self) -> bool:
        return all(e.is_constant() for r in self.rows for e in r)

    @property
    def is_ring_gsdr(self) -> bool:
        """Quotient matrix, symmetric, with linear diagonal entries."""
        return self.ctx is not None and self.is_symmetric() and all(self.rows[i][i].is_linear() for i in range(self.n))

    def transpose(self) -> "PolyMatrix":
        return self._like([list(c) for c in zip(*self.rows)])

    def submatrix(self, keep: Iterable[int]) -> "PolyMatrix":
        keep = list(keep)
        return self._like([[self.rows[i][j] for j in keep] for i in keep])

    def delete(self, i: int) -> "PolyMatrix":
        return self.submatrix(k for k in range(self.n) if k != i)

    def lift(self) -> "PolyMatrix":
        """Drop the quotient context, reading representatives as polynomials."""
        return self._like(self.rows, ctx=None)

    def format(self) -> str:
        cells = [[e.format() for e in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"PolyMatrix(n={self.n}, {self.field}, vars={self.variables})"


class SdrMatrix(PolyMatrix):
    """A symmetric matrix whose entries are constants or single variables."""

    def __init__(self, field, variables, rows, ctx=None):
        super().__init__(field, variables, rows, None)
        if not self.is_symmetric():
            raise InvalidEntry("an SDR must be symmetric")
        for r in self.rows:
            for e in r:
                if not (e.is_constant() or e.is_variable()):
                    raise InvalidEntry(f"SDR entry {e} is neither a constant nor a variable")

    @classmethod
    def of(cls, M: PolyMatrix) -> "SdrMatrix":
        return cls(M.field, M.variables, M.rows)

    def _like(self, rows, ctx="keep"):
        return PolyMatrix(self.field, self.variables, rows, None if ctx == "keep" else ctx)


# -- determinants --------------------------------------------------------


def _one(M):
    return Polynomial.constant(M.field, M.variables, 1)


def det_involution(M: PolyMatrix, limit: int = INVOLUTION_LIMIT) -> Polynomial:
    """Sum over involutions of the products M[i, s(i)]; symmetric input, characteristic 2."""
    if M.field.p != 2:
        raise UnsupportedCharacteristic("the involution expansion needs characteristic 2")
    if M.n > limit:
        raise TooLarge(f"involution expansion limited to n <= {limit}")
    A = M.rows
    memo = {0: _one(M)}

    def total(mask: int) -> Polynomial:
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        acc = A[i][i] * total(rest) if A[i][i] else Polynomial.zero(M.field, M.variables)
        j_bits = rest
        while j_bits:
            j = (j_bits & -j_bits).bit_length() - 1
            j_bits &= j_bits - 1
            if A[i][j]:
                acc = acc + A[i][j] * A[j][i] * total(rest & ~(1 << j))
        memo[mask] = acc
        return acc

    return total((1 << M.n) - 1)


def det_subset(M: PolyMatrix, limit: int = SUBSET_LIMIT) -> Polynomial:
    """Row-by-row Laplace expansion, memoized over the set of used columns."""
    n = M.n
    if n > limit:
        raise TooLarge(f"subset expansion limited to n <= {limit}")
    odd = M.field.p != 2
    table = {0: _one(M)}
    for r in range(n):
        nxt: dict[int, Polynomial] = {}
        row = M.rows[r]
        for mask, val in table.items():
            for c in range(n):
                if mask >> c & 1 or not row[c]:
                    continue
                term = val * row[c]
                if odd and bin(mask >> (c + 1)).count("1") % 2:
                    term = -term
                key = mask | 1 << c
                nxt[key] = nxt[key] + term if key in nxt else term
        table = {k: v for k, v in nxt.items() if v}
        if not table:
            return Polynomial.zero(M.field, M.variables)
    return table.get((1 << n) - 1, Polynomial.zero(M.field, M.variables))


def det_constant(M: PolyMatrix) -> FieldElement:
    """Gaussian elimination over the field; every entry must be constant."""
    F = M.field
    if not M.is_constant():
        raise InvalidEntry("det_constant needs a constant matrix")
    A = [[e.constant_term().value for e in r] for r in M.rows]
    n = len(A)
    d = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return F.zero
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            d = F.neg(d)
        p = A[col][col]
        d = F.mul(d, p)
        inv = F.inv(p)
        for r in range(col + 1, n):
            if A[r][col]:
                f = F.mul(A[r][col], inv)
                A[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[r], A[col])]
    return FieldElement(F, d)


def det(M: PolyMatrix, residual_limit: int = SUBSET_LIMIT) -> Polynomial:
    """Exact determinant over F[x] in any characteristic.

    Eliminates on nonzero constant pivots (lowest fill-in first); whatever
    remains has no constant entry and is expanded by :func:`det_subset`.
    """
    F = M.field
    n = M.n
    zero = Polynomial.zero(F, M.variables)
    rows: dict[int, dict[int, Polynomial]] = {i: {j: e for j, e in enumerate(r) if e} for i, r in enumerate(M.rows)}
    cols: dict[int, set[int]] = {j: set() for j in range(n)}
    for i, r in rows.items():
        for j in r:
            cols[j].add(i)
    factor = 1
    odd = F.p != 2
    while rows:
        best = None
        for i, r in rows.items():
            for j, e in r.items():
                if e.is_constant():
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pr, pc = best
        prow = rows.pop(pr)
        p = prow[pc].constant_term().value
        if odd:
            pos_r = sum(1 for i in rows if i < pr)
            pos_c = sum(1 for j in cols if j < pc)
            if (pos_r + pos_c) % 2:
                factor = F.neg(factor)
        factor = F.mul(factor, p)
        inv = F.inv(p)
        for j in prow:
            cols[j].discard(pr)
        for i in list(cols[pc]):
            r = rows[i]
            f = r.pop(pc).scale(inv)
            for j, v in prow.items():
                if j == pc:
                    continue
                new = r.get(j, zero) - f * v
                if new:
                    if j not in r:
                        cols[j].add(i)
                    r[j] = new
                elif j in r:
                    del r[j]
                    cols[j].discard(i)
        del cols[pc]
    if not rows:
        return Polynomial.constant(F, M.variables, factor)
    if any(not r for r in rows.values()):
        return zero
    keep_r = sorted(rows)
    keep_c = sorted(cols)
    residual = PolyMatrix(F, M.variables, [[rows[i].get(j, zero) for j in keep_c] for i in keep_r])
    return det_subset(residual, limit=residual_limit).scale(factor)


def pfaffian(M: PolyMatrix, limit: int = PFAFFIAN_LIMIT) -> Polynomial:
    """Pfaffian by expansion along the lowest remaining row, memoized over vertex subsets."""
    if not M.is_alternating():
        raise NotAlternating("the Pfaffian needs an antisymmetric matrix with zero diagonal")
    n = M.n
    if n > limit:
        raise TooLarge(f"Pfaffian limited to n <= {limit}")
    zero = Polynomial.zero(M.field, M.variables)
    if n % 2:
        return zero
    A = M.rows
    memo = {0: _one(M)}

    def pf(mask: int) -> Polynomial:
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        acc = zero
        pos = 0
        bits = rest
        while bits:
            j = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            pos += 1
            if A[i][j]:
                term = A[i][j] * pf(rest & ~(1 << j))
                acc = acc + term if pos % 2 else acc - term
        memo[mask] = acc
        return acc

    return pf((1 << n) - 1)


# -- congruence transformations over R(l^2) ------------------------------


def _need_ctx(A: PolyMatrix) -> QuotientContext:
    if A.ctx is None:
        raise ContextMismatch("this transformation works on quotient matrices (see project())")
    if not A.is_symmetric():
        raise InvalidEntry("matrix must be symmetric")
    return A.ctx


def _abs_entry(ctx: QuotientContext, e: Polynomial) -> Polynomial:
    a = QuotientElement(ctx, e).abs()
    return Polynomial.constant(ctx.field, ctx.variables, a)


def project(M: PolyMatrix, ctx: QuotientContext) -> PolyMatrix:
    """Entrywise projection to R(l); the determinant commutes with it."""
    return PolyMatrix(M.field, M.variables, [[ctx.reduce(e) for e in r] for r in M.rows], ctx)


def clean(A: PolyMatrix) -> PolyMatrix:
    """Replace each off-diagonal entry by its absolute value."""
    ctx = _need_ctx(A)
    rows = A.entries()
    n = A.n
    for i in range(n):
        for j in range(i + 1, n):
            e = rows[i][j]
            if not e.is_constant():
                rows[i][j] = rows[j][i] = _abs_entry(ctx, e)
    return A._like(rows)


def _add_inplace(rows, ctx: QuotientContext, i: int, j: int, alpha: int):
    # R_j += alpha R_i, C_j += alpha C_i, then clean row/column j
    F = ctx.field
    n = len(rows)
    if not alpha:
        return
    rows[j] = [ctx.reduce(a + b.scale(alpha)) for a, b in zip(rows[j], rows[i])]
    for k in range(n):
        rows[k][j] = ctx.reduce(rows[k][j] + rows[k][i].scale(alpha))
    for k in range(n):
        if k != j:
            e = rows[k][j]
            if not e.is_constant():
                e = _abs_entry(ctx, e)
            rows[k][j] = rows[j][k] = e
    del F


def add_multiple(A: PolyMatrix, i: int, j: int, alpha) -> PolyMatrix:
    """Add alpha times row/column i to row/column j, then clean."""
    ctx = _need_ctx(A)
    if i == j:
        raise ValueError("add_multiple needs two distinct indices")
    alpha = FieldElement(A.field, alpha).value if isinstance(alpha, int) else alpha.value
    rows = clean(A).entries()
    _add_inplace(rows, ctx, i, j, alpha)
    return A._like(rows)


def isolate(A: PolyMatrix, i: int) -> PolyMatrix:
    """Clear row and column i using the invertible pivot A[i, i]."""
    ctx = _need_ctx(A)
    F = A.field
    pivot_abs = QuotientElement(ctx, A[i, i]).abs()
    if not pivot_abs:
        raise NonInvertiblePivot(f"diagonal entry {A[i, i]} is not invertible in {ctx}")
    inv = F.inv(pivot_abs.value)
    rows = clean(A).entries()
    for j in range(A.n):
        if j != i:
            alpha = F.mul(rows[i][j].constant_term().value, inv)
            _add_inplace(rows, ctx, i, j, alpha)
    return A._like(rows)


def dedup_diagonal(N: PolyMatrix) -> PolyMatrix:
    """Keep each variable at most once on the diagonal, preserving the determinant exactly.

    For a variable found at diagonal positions s < i2 < ..., row/column s is
    added to each later position, which turns that diagonal entry into
    x + x = 0.  Processes variables in ascending index.
    """
    if N.field.p != 2:
        raise UnsupportedCharacteristic("diagonal deduplication relies on 2x = 0")
    rows = N.entries()
    n = N.n
    for d in range(n):
        e = rows[d][d]
        if not (e.is_constant() or e.is_variable()):
            raise InvalidEntry(f"diagonal entry {e} is neither a constant nor a variable")
    for v in range(len(N.variables)):
        where = [d for d in range(n) if rows[d][d].is_variable() and rows[d][d].variable_index() == v]
        if len(where) < 2:
            continue
        s = where[0]
        for t in where[1:]:
            rows[t] = [a + b for a, b in zip(rows[t], rows[s])]
            for k in range(n):
                rows[k][t] = rows[k][t] + rows[k][s]
    return N._like(rows, ctx=None)


mat_clean = clean
mat_add = add_multiple
mat_iso = isolate
mat_dedup_diagonal = dedup_diagonal
mat_project = project
