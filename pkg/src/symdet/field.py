"""Exact arithmetic in GF(2^k), plus prime fields GF(p) for odd p.

Elements are stored as non-negative integers whose base-p digits are the
coordinates in the polynomial basis: for GF(2^k), bit ``i`` is the
coefficient of ``t^i``.  :class:`FieldSpec` does the arithmetic on those
integers; :class:`FieldElement` wraps one integer together with its field.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ContextMismatch, DivisionByZero, UnsupportedCharacteristic

# Default irreducible moduli for GF(2^k), bit i = coefficient of t^i.
DEFAULT_MODULI = {
    2: 0b111,  # t^2 + t + 1
    3: 0b1011,  # t^3 + t + 1
    4: 0b10011,  # t^4 + t + 1
    8: 0b100011011,  # t^8 + t^4 + t^3 + t + 1
}

MAX_EXTENSION_DEGREE = 16
_TABLE_LIMIT = 256


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _gf2_divmod(a: int, b: int) -> tuple[int, int]:
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def is_irreducible_gf2(modulus: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2 over GF(2)."""
    k = modulus.bit_length() - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in range(1 << d):
            if _gf2_mod(modulus, (1 << d) | low) == 0:
                return False
    return True


def smallest_irreducible_gf2(k: int) -> int:
    for low in range(1 << k):
        cand = (1 << k) | low
        if is_irreducible_gf2(cand):
            return cand
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^k).

    ``modulus`` is only meaningful for ``p == 2`` and ``k > 1``; it is read
    as a bit-vector (bit i is the coefficient of t^i, leading bit included).
    Odd characteristic is limited to prime fields.
    """

    p: int = 2
    k: int = 1
    modulus: int | None = None

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if self.p != 2 and self.k != 1:
            raise UnsupportedCharacteristic("odd characteristic is supported for prime fields only")
        if self.k > MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree above {MAX_EXTENSION_DEGREE} is not supported")
        if self.k == 1:
            object.__setattr__(self, "modulus", None)
            return
        modulus = self.modulus
        if modulus is None:
            modulus = DEFAULT_MODULI.get(self.k) or smallest_irreducible_gf2(self.k)
            object.__setattr__(self, "modulus", modulus)
        if modulus.bit_length() - 1 != self.k:
            raise ValueError(f"modulus {modulus} does not have degree {self.k}")
        if not is_irreducible_gf2(modulus):
            raise ValueError(f"modulus {modulus} is reducible over GF(2)")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``p``, ``p^k`` or ``p^k:modulus`` (modulus as an integer)."""
        text = text.strip()
        modulus = None
        if ":" in text:
            text, mod_text = text.split(":", 1)
            modulus = int(mod_text, 0)
        if "^" in text:
            p_text, k_text = text.split("^", 1)
            return cls(int(p_text), int(k_text), modulus)
        return cls(int(text), 1, modulus)

    def __str__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def characteristic(self) -> int:
        return self.p

    # -- arithmetic on integer encodings ---------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not a literal of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return (a + b) % self.p

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return (-a) % self.p

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return (a - b) % self.p

    @cached_property
    def _mul_table(self):
        q = self.order
        return [[_gf2_mod(_clmul(a, b), self.modulus) for b in range(q)] for a in range(q)]

    def mul(self, a: int, b: int) -> int:
        if self.p != 2:
            return (a * b) % self.p
        if self.k == 1:
            return a & b
        if self.order <= _TABLE_LIMIT:
            return self._mul_table[a][b]
        return _gf2_mod(_clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.p != 2:
            return pow(a, -1, self.p)
        if self.k == 1:
            return 1
        # extended Euclid in GF(2)[t]
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1:
            quot, rem = _gf2_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 ^ _clmul(quot, s1)
        return _gf2_mod(s0, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        """Square root by inverting Frobenius: a^(2^(k-1))."""
        if self.p != 2:
            raise UnsupportedCharacteristic(f"square roots are only provided in characteristic 2, not in {self}")
        for _ in range(self.k - 1):
            a = self.mul(a, a)
        return a

    # -- element-level helpers -------------------------------------------

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.order if self.p != 2 else value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        """All q elements, in increasing order of their integer literal."""
        return [FieldElement(self, v) for v in range(self.order)]


GF2 = FieldSpec(2)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        self.spec.check(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ContextMismatch(f"cannot combine elements of {self.spec} and {other.spec}")
            return other.value
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.sqrt(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.spec}({self.value})"

    def __str__(self):
        return str(self.value)


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_sqrt(a: FieldElement) -> FieldElement:
    return a.sqrt()


def fe_enumerate(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()
