"""Exact coefficient fields: the rationals and prime fields F_p.

Polynomials and matrices store raw coefficients (``Fraction`` for Q, ``int``
in ``[0, p)`` for F_p) and delegate arithmetic to a :class:`Field`.
:class:`FieldElement` is the user-facing scalar that remembers its field.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

DEFAULT_PRIME = 32003


class FieldMismatch(TypeError):
    """Raised when values from two different fields are combined."""


def is_prime(n: int) -> bool:
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


class Field:
    """Base class; subclasses implement the raw-value arithmetic."""

    characteristic: int

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.convert(value))

    def convert(self, value):
        raise NotImplementedError

    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def check(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatch(f"cannot combine {self} with {other}")


class RationalField(Field):
    characteristic = 0

    def convert(self, value) -> Fraction:
        if isinstance(value, FieldElement):
            self.check(value.field)
            return value.value
        if isinstance(value, float):
            raise TypeError("floating-point coefficients are not exact")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def descriptor(self) -> dict:
        return {"type": "q"}


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if p >= 2**31:
            raise ValueError(f"prime modulus must be below 2^31, got {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def convert(self, value) -> int:
        if isinstance(value, FieldElement):
            self.check(value.field)
            return value.value
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, float):
            raise TypeError("floating-point coefficients are not exact")
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def descriptor(self) -> dict:
        return {"type": "fp", "p": self.p}


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc: dict) -> Field:
    kind = desc.get("type")
    if kind == "q":
        return QQ
    if kind == "fp":
        return PrimeField(desc.get("p", DEFAULT_PRIME))
    raise ValueError(f"unknown field type {kind!r}")


class FieldElement:
    """An exact scalar bound to a field. Immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.convert(value))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> object:
        if isinstance(other, FieldElement):
            self.field.check(other.field)
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.value}"


Scalar = Union[int, Fraction, FieldElement]
