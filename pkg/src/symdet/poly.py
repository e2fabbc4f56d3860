"""Sparse multivariate polynomials over a :class:`~symdet.field.FieldSpec`.

A polynomial is a map from exponent tuples to nonzero coefficients (stored
as field literals).  It also carries the tuple of variable names it is
written in; arithmetic between polynomials with different fields or
variable tuples raises :class:`~symdet.errors.ContextMismatch`.

The text grammar understood by :func:`parse_poly`::

    poly   := term ('+' term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' uint)?
    coeff  := uint            # a field literal
"""

from __future__ import annotations

import re
from typing import Mapping, Sequence

from .errors import ContextMismatch, NotASquare, ParseError
from .field import FieldElement, FieldSpec

MAX_VARIABLES = 63

Monomial = tuple  # exponent vector, one entry per variable


def graded_key(mono: Monomial):
    """Ascending graded order: total degree first, then the bitmask order.

    On multilinear monomials the tie-break coincides with comparing the
    bitmask encodings (bit i set iff x_i divides the monomial).
    """
    return (sum(mono), mono[::-1])


def mono_to_mask(mono: Monomial) -> int:
    mask = 0
    for i, e in enumerate(mono):
        if e > 1:
            raise ValueError("monomial is not multilinear")
        if e:
            mask |= 1 << i
    return mask


def mask_to_mono(mask: int, nvars: int) -> Monomial:
    return tuple((mask >> i) & 1 for i in range(nvars))


def _literal(field: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        if c.spec != field:
            raise ContextMismatch(f"coefficient from {c.spec} used in {field}")
        return c.value
    if isinstance(c, int):
        return field(c).value
    raise TypeError(f"cannot use {c!r} as a coefficient")


class Polynomial:
    __slots__ = ("field", "variables", "_terms", "_hash")

    def __init__(self, field: FieldSpec, variables: Sequence[str], terms: Mapping[Monomial, int] = ()):
        variables = tuple(variables)
        if len(variables) > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables are supported")
        self.field = field
        self.variables = variables
        clean = {}
        for mono, c in dict(terms).items():
            if len(mono) != len(variables):
                raise ValueError(f"monomial {mono} does not match {len(variables)} variables")
            if c:
                clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    # -- construction ----------------------------------------------------

    @classmethod
    def _raw(cls, field, variables, terms):
        # terms already canonical (tuples, nonzero literals)
        obj = cls.__new__(cls)
        obj.field = field
        obj.variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field: FieldSpec, variables: Sequence[str]) -> "Polynomial":
        return cls(field, variables)

    @classmethod
    def constant(cls, field: FieldSpec, variables: Sequence[str], c) -> "Polynomial":
        variables = tuple(variables)
        return cls(field, variables, {(0,) * len(variables): _literal(field, c)})

    @classmethod
    def variable(cls, field: FieldSpec, variables: Sequence[str], which) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(which) if isinstance(which, str) else which
        mono = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(field, variables, {mono: 1})

    @classmethod
    def from_masks(cls, field: FieldSpec, variables: Sequence[str], terms: Mapping[int, int]) -> "Polynomial":
        """Build a multilinear polynomial from ``{bitmask: coefficient}``."""
        variables = tuple(variables)
        n = len(variables)
        return cls(field, variables, {mask_to_mono(m, n): c for m, c in terms.items()})

    def _like(self, terms) -> "Polynomial":
        return Polynomial._raw(self.field, self.variables, terms)

    def _check(self, other: "Polynomial"):
        if self.field != other.field or self.variables != other.variables:
            raise ContextMismatch("polynomials belong to different rings")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, self.variables, other)
        return NotImplemented

    # -- inspection ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, mono: Monomial) -> FieldElement:
        return FieldElement(self.field, self._terms.get(tuple(mono), 0))

    def constant_term(self) -> FieldElement:
        return self.coeff((0,) * self.nvars)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_linear(self) -> bool:
        """Degree at most one (constants and zero included)."""
        return all(sum(m) <= 1 for m in self._terms)

    def is_multilinear(self) -> bool:
        return all(e <= 1 for m in self._terms for e in m)

    def is_variable(self) -> bool:
        """True for a bare variable ``x_i`` with coefficient 1."""
        if len(self._terms) != 1:
            return False
        (mono, c), = self._terms.items()
        return c == 1 and sum(mono) == 1

    def variable_index(self) -> int:
        (mono,) = self._terms
        return mono.index(1)

    def support(self) -> list[int]:
        """Indices of the variables that occur in some term, ascending."""
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def mask_terms(self) -> dict[int, int]:
        return {mono_to_mask(m): c for m, c in self._terms.items()}

    def sorted_terms(self):
        """Terms in ascending graded order."""
        return sorted(self._terms.items(), key=lambda t: graded_key(t[0]))

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.field == other.field
                and self.variables == other.variables
                and self._terms == other._terms
            )
        if isinstance(other, (int, FieldElement)):
            return self == Polynomial.constant(self.field, self.variables, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.variables, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = F.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return self._like({m: F.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.field
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = F.add(out.get(m, 0), F.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return self._like(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = _literal(self.field, c)
        if not c:
            return self._like({})
        F = self.field
        return self._like({m: F.mul(v, c) for m, v in self._terms.items()})

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.field, self.variables, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, point: Sequence) -> FieldElement:
        F = self.field
        vals = [_literal(F, v) for v in point]
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = F.mul(t, F.pow(v, e))
            total = F.add(total, t)
        return FieldElement(F, total)

    # -- structure used by the algorithms --------------------------------

    def square(self) -> "Polynomial":
        """Termwise square; equals ``self * self`` in characteristic 2."""
        if self.field.p != 2:
            return self * self
        F = self.field
        return self._like({tuple(2 * e for e in m): F.mul(c, c) for m, c in self._terms.items()})

    def mult_reduce(self, ell: Sequence) -> "Polynomial":
        """Multilinear representative modulo <x_i^2 + ell_i>: each x_i^2 becomes ell_i."""
        if len(ell) != self.nvars:
            raise ContextMismatch(f"reduction tuple has {len(ell)} entries for {self.nvars} variables")
        F = self.field
        lits = [_literal(F, v) for v in ell]
        out: dict = {}
        for m, c in self._terms.items():
            if all(e <= 1 for e in m):
                s = F.add(out.get(m, 0), c)
            else:
                for v, e in zip(lits, m):
                    if e > 1:
                        c = F.mul(c, F.pow(v, e // 2))
                m = tuple(e & 1 for e in m)
                s = F.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._like(out)

    def linear_part(self) -> "Polynomial":
        return self._like({m: c for m, c in self._terms.items() if sum(m) <= 1})

    def partial(self, i: int) -> "Polynomial":
        """Formal derivative with respect to variable ``i``."""
        F = self.field
        out: dict = {}
        for m, c in self._terms.items():
            e = m[i]
            if not e:
                continue
            c = F.mul(c, e % F.p)
            if not c:
                continue
            mono = m[:i] + (e - 1,) + m[i + 1 :]
            out[mono] = F.add(out.get(mono, 0), c)
        return self._like({m: c for m, c in out.items() if c})

    def valuation(self) -> float:
        """Smallest total degree of a term; ``inf`` for zero."""
        return min((sum(m) for m in self._terms), default=float("inf"))

    def is_full(self) -> bool:
        """All 2^s multilinear monomials over the s occurring variables are present."""
        if not self.is_multilinear():
            raise ValueError("fullness is only defined for multilinear polynomials")
        return len(self._terms) == 1 << len(self.support())

    def is_square(self) -> bool:
        if self.field.p == 2:
            return all(e % 2 == 0 for m in self._terms for e in m)
        try:
            self.sqrt()
        except NotASquare:
            return False
        return True

    def sqrt(self) -> "Polynomial":
        """The square root; in odd characteristic, the root whose leading coefficient is the smaller literal."""
        F = self.field
        if F.p == 2:
            if not self.is_square():
                raise NotASquare(f"{self} has an odd exponent")
            return self._like({tuple(e // 2 for e in m): F.sqrt(c) for m, c in self._terms.items()})
        return _sqrt_odd(self)

    # -- text ------------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_poly(self, names)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, {self.variables}, {self.field})"


def _prime_sqrt(p: int, a: int) -> int | None:
    for r in range(p):
        if r * r % p == a:
            return r
    return None


def _sqrt_odd(P: Polynomial) -> Polynomial:
    # Peel off the leading term of the root one graded-order step at a time.
    F = P.field
    zero = P._like({})
    if P.is_zero:
        return zero
    key = graded_key

    def lead(Q):
        return max(Q._terms.items(), key=lambda t: key(t[0]))

    m0, c0 = lead(P)
    if any(e % 2 for e in m0):
        raise NotASquare(f"{P} is not a square")
    r0 = _prime_sqrt(F.p, c0)
    if r0 is None:
        raise NotASquare(f"{P} is not a square")
    root_lead = tuple(e // 2 for e in m0)
    Q = P._like({root_lead: r0})
    two_lead = F.mul(2 % F.p, r0)
    while True:
        R = P - Q * Q
        if R.is_zero:
            return Q
        mr, cr = lead(R)
        mono = tuple(a - b for a, b in zip(mr, root_lead))
        if min(mono) < 0 or key(mono) >= key(root_lead):
            raise NotASquare(f"{P} is not a square")
        Q = Q + P._like({mono: F.div(cr, two_lead)})


# -- parsing and formatting ----------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("var", name))
        elif sym in "+-*^":
            out.append((sym, sym))
        else:
            raise ParseError(f"unexpected character {sym!r} at position {m.start(3)}")
        pos = m.end()
    return out


def parse_poly(text: str, field: FieldSpec, variables: Sequence[str] | None = None) -> Polynomial:
    """Parse ``text``.  Without ``variables``, names are bound in order of first occurrence."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    fixed = variables is not None
    names: list[str] = list(variables) if fixed else []
    raw_terms: list[tuple[int, dict[int, int]]] = []
    pos = 0

    def expect(kind):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos][0] != kind:
            found = tokens[pos][1] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected {kind}, found {found!r}")
        pos += 1
        return tokens[pos - 1][1]

    def factor(exps):
        nonlocal pos
        name = expect("var")
        if name not in names:
            if fixed:
                raise ParseError(f"unknown variable {name!r}")
            names.append(name)
        power = 1
        if pos < len(tokens) and tokens[pos][0] == "^":
            pos += 1
            power = expect("int")
        idx = names.index(name)
        exps[idx] = exps.get(idx, 0) + power

    negate = False
    if tokens[0][0] == "-":
        negate = True
        pos = 1
    while True:
        exps: dict[int, int] = {}
        coeff = 1
        if pos < len(tokens) and tokens[pos][0] == "int":
            coeff = tokens[pos][1]
            if coeff >= field.order:
                raise ParseError(f"{coeff} is not a literal of {field}")
            pos += 1
        else:
            factor(exps)
        while pos < len(tokens) and tokens[pos][0] == "*":
            pos += 1
            factor(exps)
        raw_terms.append((field.neg(coeff) if negate else coeff, exps))
        if pos == len(tokens):
            break
        negate = tokens[pos][0] == "-"
        if not negate:
            expect("+")
        else:
            pos += 1

    n = len(names)
    result = Polynomial.zero(field, names)
    for coeff, exps in raw_terms:
        mono = tuple(exps.get(i, 0) for i in range(n))
        result = result + Polynomial(field, names, {mono: coeff})
    return result


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _format_term(mono: Monomial, c: int, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


def format_poly(P: Polynomial, names: Sequence[str] | None = None) -> str:
    """Render with higher total degree first; within a degree, lex order on exponents."""
    names = list(names) if names is not None else list(P.variables)
    if P.is_zero:
        return "0"
    terms = sorted(P.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    return "+".join(_format_term(m, c, names) for m, c in terms)

