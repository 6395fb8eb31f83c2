"""Exact scalar arithmetic: the rationals and odd prime fields.

Every number in this package is exact.  Scalars are either
``fractions.Fraction`` values (characteristic zero) or ``ModularInt``
residues (odd prime characteristic).  Floating point never appears.

Characteristic 2 is rejected at configuration time: the normal forms in
the diagram calculus divide by quantities that specialise to 2, and the
basis change xi1 = xi_s + xi2 degenerates there.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction


class FieldConfigError(ValueError):
    """Unusable field configuration (characteristic 2, composite modulus)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModularInt:
    """A residue in F_p with ordinary operator arithmetic."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, ModularInt):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return ModularInt(other, self.p)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModularInt(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModularInt(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModularInt(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModularInt(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModularInt(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return ModularInt(-self.value, self.p)

    def __pow__(self, n: int):
        return ModularInt(pow(self.value, n, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, ModularInt):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return "ModularInt(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Rationals:
    """The field Q, scalars are ``Fraction`` values."""

    characteristic = 0
    name = "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def from_string(self, s: str):
        return Fraction(s)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError("cannot coerce %r into Q" % (value,))

    def scalar_str(self, value) -> str:
        return str(value)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """The field F_p for an odd prime p."""

    def __init__(self, p: int):
        if p == 2:
            raise FieldConfigError(
                "characteristic 2 is not supported: the diagram normal forms "
                "need 2 to be invertible"
            )
        if not _is_prime(p):
            raise FieldConfigError("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.name = "p=%d" % p

    @property
    def zero(self):
        return ModularInt(0, self.p)

    @property
    def one(self):
        return ModularInt(1, self.p)

    def from_int(self, n: int):
        return ModularInt(n, self.p)

    def from_string(self, s: str):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return self.from_int(int(num)) / self.from_int(int(den))
        return self.from_int(int(s))

    def coerce(self, value):
        if isinstance(value, ModularInt):
            if value.p != self.p:
                raise TypeError("residue modulo %d used in F_%d" % (value.p, self.p))
            return value
        if isinstance(value, int):
            return ModularInt(value, self.p)
        if isinstance(value, Fraction):
            return self.from_int(value.numerator) / self.from_int(value.denominator)
        raise TypeError("cannot coerce %r into F_%d" % (value, self.p))

    def scalar_str(self, value) -> str:
        return str(self.coerce(value).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = Rationals()

_default_field = QQ


def field_from_name(name: str):
    """Resolve a field spec string: ``q`` for Q, ``p=7`` or ``7`` for F_7."""
    name = name.strip().lower()
    if name in ("q", "qq", "0", "rational", "rationals"):
        return QQ
    if name.startswith("p="):
        name = name[2:]
    try:
        p = int(name)
    except ValueError:
        raise FieldConfigError("unrecognised field %r (expected 'q' or 'p=<odd prime>')" % name)
    return PrimeField(p)


def default_field():
    return _default_field


def set_default_field(field) -> None:
    global _default_field
    _default_field = field


@contextmanager
def using_field(field):
    """Temporarily install ``field`` as the default."""
    global _default_field
    old = _default_field
    _default_field = field
    try:
        yield field
    finally:
        _default_field = old
