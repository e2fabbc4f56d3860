"""Quotient rings R(l) = F[x_1..x_m] / <x_1^2 + l_1, ..., x_m^2 + l_m>.

Every class of R(l) has a unique multilinear representative, so a
:class:`QuotientElement` simply stores that representative.  Products are
computed on bitmask monomials: ``x^a * x^b = l^(a & b) * x^(a ^ b)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import ContextMismatch, InvalidEntry, TooLarge, UnsupportedCharacteristic
from .field import FieldElement, FieldSpec
from .poly import Polynomial, mask_to_mono, _literal

ENUMERATION_BUDGET_BITS = 24


@dataclass(frozen=True)
class QuotientContext:
    field: FieldSpec
    variables: tuple
    ell: tuple
    ell_sqrt: tuple = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.field.p != 2:
            raise UnsupportedCharacteristic("quotient rings are only provided in characteristic 2")
        variables = tuple(self.variables)
        if len(self.ell) != len(variables):
            raise ContextMismatch(f"{len(self.ell)} reduction values for {len(variables)} variables")
        ell = tuple(FieldElement(self.field, _literal(self.field, v)) for v in self.ell)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "ell", ell)
        # finite fields of characteristic 2 are perfect: every l_i is a square
        object.__setattr__(self, "ell_sqrt", tuple(v.sqrt() for v in ell))
        object.__setattr__(self, "_ell_lits", tuple(v.value for v in ell))
        object.__setattr__(self, "_ell_cache", {})

    @classmethod
    def broadcast(cls, field: FieldSpec, variables: Sequence[str], value) -> "QuotientContext":
        return cls(field, tuple(variables), (value,) * len(variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __str__(self):
        return f"R({','.join(str(v) for v in self.ell)}) over {self.field}"

    def _ell_power(self, mask: int) -> int:
        cache = self._ell_cache
        v = cache.get(mask)
        if v is None:
            F = self.field
            v = 1
            for i, li in enumerate(self._ell_lits):
                if mask >> i & 1:
                    v = F.mul(v, li)
            cache[mask] = v
        return v

    def _check_poly(self, P: Polynomial):
        if P.field != self.field or P.variables != self.variables:
            raise ContextMismatch("polynomial does not belong to the ambient ring of this quotient")

    def reduce(self, P: Polynomial) -> Polynomial:
        """Multilinear representative of the class of ``P``."""
        self._check_poly(P)
        return P.mult_reduce(self.ell)

    def project(self, P: Polynomial) -> "QuotientElement":
        return QuotientElement(self, self.reduce(P))

    def element(self, rep: Polynomial) -> "QuotientElement":
        self._check_poly(rep)
        if not rep.is_multilinear():
            raise ValueError("quotient representatives must be multilinear; use project()")
        return QuotientElement(self, rep)

    def constant(self, c) -> "QuotientElement":
        return QuotientElement(self, Polynomial.constant(self.field, self.variables, c))

    @property
    def one(self) -> "QuotientElement":
        return self.constant(1)

    @property
    def zero(self) -> "QuotientElement":
        return self.constant(0)

    def mul_reps(self, a: Polynomial, b: Polynomial) -> Polynomial:
        """Product of two multilinear representatives, reduced."""
        F = self.field
        out: dict[int, int] = {}
        bm = b.mask_terms()
        for ma, ca in a.mask_terms().items():
            for mb, cb in bm.items():
                m = ma ^ mb
                c = F.mul(F.mul(ca, cb), self._ell_power(ma & mb))
                s = F.add(out.get(m, 0), c)
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial.from_masks(F, self.variables, out)

    # -- dense vectors, for enumeration ----------------------------------

    def _budget(self):
        bits = (1 << self.nvars) * math.log2(self.field.order)
        if bits > ENUMERATION_BUDGET_BITS:
            raise TooLarge(
                f"R has {self.field.order}^{1 << self.nvars} elements, beyond the 2^{ENUMERATION_BUDGET_BITS} budget"
            )

    def _dense_mul(self, u: tuple, v: tuple) -> tuple:
        F = self.field
        out = [0] * len(u)
        for ma, ca in enumerate(u):
            if not ca:
                continue
            for mb, cb in enumerate(v):
                if cb:
                    m = ma ^ mb
                    out[m] = F.add(out[m], F.mul(F.mul(ca, cb), self._ell_power(ma & mb)))
        return tuple(out)

    def _from_dense(self, vec: tuple) -> "QuotientElement":
        n = self.nvars
        terms = {mask_to_mono(m, n): c for m, c in enumerate(vec) if c}
        return QuotientElement(self, Polynomial(self.field, self.variables, terms))

    @staticmethod
    def _to_dense(r: "QuotientElement", size: int) -> tuple:
        vec = [0] * size
        for m, c in r.rep.mask_terms().items():
            vec[m] = c
        return tuple(vec)

    def elements(self) -> list["QuotientElement"]:
        """Every element of R, each exactly once."""
        self._budget()
        q = self.field.order
        size = 1 << self.nvars
        return [self._from_dense(vec) for vec in itertools.product(range(q), repeat=size)]

    def linear_elements(self) -> list["QuotientElement"]:
        """Projections of all linear polynomials c_0 + c_1 x_1 + ... + c_m x_m."""
        q = self.field.order
        n = self.nvars
        size = 1 << n
        out = []
        for coeffs in itertools.product(range(q), repeat=n + 1):
            vec = [0] * size
            vec[0] = coeffs[0]
            for i in range(n):
                vec[1 << i] = coeffs[i + 1]
            out.append(self._from_dense(tuple(vec)))
        return out

    def linear_closure(self) -> set["QuotientElement"]:
        """All products of linear elements (the multiplicative closure), by saturation."""
        self._budget()
        size = 1 << self.nvars
        gens = [self._to_dense(g, size) for g in self.linear_elements()]
        seen = set(gens)
        work = list(seen)
        while work:
            u = work.pop()
            for g in gens:
                w = self._dense_mul(u, g)
                if w not in seen:
                    seen.add(w)
                    work.append(w)
        return {self._from_dense(v) for v in seen}


@dataclass(frozen=True)
class QuotientElement:
    ctx: QuotientContext
    rep: Polynomial

    def _other(self, other) -> "QuotientElement":
        if isinstance(other, QuotientElement):
            if other.ctx != self.ctx:
                raise ContextMismatch("elements of different quotient rings")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ctx.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return QuotientElement(self.ctx, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        return self + other  # characteristic 2

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return QuotientElement(self.ctx, self.ctx.mul_reps(self.rep, other.rep))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self.ctx.one
        for _ in range(e):
            result = result * self
        return result

    def __bool__(self):
        return not self.rep.is_zero

    def lift(self) -> Polynomial:
        return self.rep

    def square_constant(self) -> FieldElement:
        sq = (self * self).rep
        if not sq.is_constant():
            raise InvalidEntry(f"square of {self.rep} is not a constant")
        return sq.constant_term()

    def abs(self) -> FieldElement:
        """The constant whose square equals the square of this element."""
        return self.square_constant().sqrt()

    def is_invertible(self) -> bool:
        return bool(self.abs())

    def is_linear(self) -> bool:
        return self.rep.is_linear()

    def __str__(self):
        return str(self.rep)


def q_project(P: Polynomial, ctx: QuotientContext) -> QuotientElement:
    return ctx.project(P)


def q_mul(r: QuotientElement, s: QuotientElement) -> QuotientElement:
    return r * s


def q_abs(r: QuotientElement) -> FieldElement:
    return r.abs()
