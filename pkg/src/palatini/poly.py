"""Sparse multivariate polynomials over an exact field.

Monomials are exponent tuples. Term maps never hold zero coefficients.
The fixed monomial order is graded reverse lexicographic with
X0 > X1 > ... > X_{n-1}.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple

from .field import Field, FieldElement, FieldMismatch, QQ

Monomial = Tuple[int, ...]

NVARS = 6


def grevlex_key(mono: Monomial):
    """Sort key; larger key means larger monomial in grevlex."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


@lru_cache(maxsize=None)
def _basis(nvars: int, d: int) -> Tuple[Monomial, ...]:
    monos = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        monos.append(tuple(e))
    monos.sort(key=grevlex_key, reverse=True)
    return tuple(monos)


def monomial_basis(nvars: int, d: int) -> List[Monomial]:
    """All monomials of degree ``d`` in ``nvars`` variables, grevlex-descending."""
    if d < 0:
        return []
    return list(_basis(nvars, d))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> Dict[Monomial, int]:
    return {m: i for i, m in enumerate(_basis(nvars, d))}


def num_monomials(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1) if d >= 0 else 0


class Polynomial:
    """Immutable sparse polynomial. ``terms`` maps exponent tuples to raw coefficients."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong length for {nvars} variables")
                if not field.is_zero(c):
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, nvars, terms):
        # Trusted constructor: terms already clean.
        p = object.__new__(cls)
        p.field = field
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, field: Field = QQ, nvars: int = NVARS) -> "Polynomial":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, c, field: Field = QQ, nvars: int = NVARS) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: field.convert(c)})

    @classmethod
    def variable(cls, i: int, field: Field = QQ, nvars: int = NVARS) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(field, nvars, {tuple(e): field.one()})

    @classmethod
    def variables(cls, field: Field = QQ, nvars: int = NVARS) -> List["Polynomial"]:
        return [cls.variable(i, field, nvars) for i in range(nvars)]

    @classmethod
    def from_dict(cls, terms, field: Field = QQ, nvars: int = NVARS) -> "Polynomial":
        return cls(field, nvars, {tuple(m): field.convert(c) for m, c in terms.items()})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def coeff(self, mono: Sequence[int]) -> FieldElement:
        return FieldElement(self.field, self.terms.get(tuple(mono), self.field.zero()))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> FieldElement:
        return self.coeff(self.leading_monomial())

    def sorted_terms(self) -> List[Tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def coefficient_vector(self, d: int) -> list:
        """Dense coefficients in the grevlex basis of degree ``d``."""
        idx = monomial_index(self.nvars, d)
        row = [self.field.zero()] * len(idx)
        for m, c in self.terms.items():
            try:
                row[idx[m]] = c
            except KeyError:
                raise ValueError(f"term {m} is not of degree {d}") from None
        return row

    @classmethod
    def from_vector(cls, vec: Sequence, d: int, field: Field, nvars: int = NVARS) -> "Polynomial":
        basis = _basis(nvars, d)
        return cls(field, nvars, {m: field.convert(c) for m, c in zip(basis, vec)})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)) or hasattr(other, "numerator"):
            return Polynomial.constant(self.field.convert(other), self.field, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = f.add(out[m], c)
                if f.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Polynomial._raw(f, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial._raw(f, self.nvars, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, FieldElement)) or hasattr(other, "numerator"):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        f = self.field
        out: dict = {}
        p = getattr(f, "p", None)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if p is None:
                    out[m] = out.get(m, 0) + c1 * c2
                else:
                    out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial._raw(f, self.nvars, {m: c for m, c in out.items() if c != 0})

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        f = self.field
        c = f.convert(c)
        if f.is_zero(c):
            return Polynomial.zero(f, self.nvars)
        return Polynomial._raw(f, self.nvars, {m: f.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.field, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # -- calculus and evaluation -------------------------------------------

    def diff(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        f = self.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            c2 = f.mul(c, f.convert(e))
            if f.is_zero(c2):
                continue
            out[m[:i] + (e - 1,) + m[i + 1:]] = c2
        return Polynomial._raw(f, self.nvars, out)

    def evaluate(self, point: Sequence) -> FieldElement:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        f = self.field
        vals = [f.convert(x) for x in point]
        total = f.zero()
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = f.mul(t, v**e if f.characteristic == 0 else pow(v, e, f.p))
            total = f.add(total, t)
        return FieldElement(f, total)

    def divide_by_variable(self, i: int) -> "Polynomial":
        """Exact division by X_i; raises ``ArithmeticError`` if not divisible."""
        out = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                raise ArithmeticError(f"term {m} is not divisible by X{i}")
            out[m[:i] + (m[i] - 1,) + m[i + 1:]] = c
        return Polynomial._raw(self.field, self.nvars, out)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[self.leading_monomial()]
        return self.scale(self.field.inv(lc))

    def map_coefficients(self, field: Field) -> "Polynomial":
        """Reinterpret coefficients in another field (e.g. reduce Q -> F_p)."""
        return Polynomial(field, self.nvars, {m: field.convert(c) for m, c in self.terms.items()})

    def substitute(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Replace X_i by ``values[i]`` (polynomials, possibly in other variables)."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        tgt = values[0]
        out = Polynomial.zero(tgt.field, tgt.nvars)
        for m, c in self.terms.items():
            t = Polynomial.constant(c, tgt.field, tgt.nvars)
            for v, e in zip(values, m):
                if e:
                    t = t * (v**e)
            out = out + t
        return out

    # -- text form ----------------------------------------------------------

    def to_string(self) -> str:
        """Serialize as a grevlex-sorted list of ``coeff monomial`` pairs."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in enumerate(m) if e
            ) or "1"
            parts.append(f"{c} {mono}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, field: Field = QQ, nvars: int = NVARS) -> "Polynomial":
        tokens = text.split()
        if tokens == ["0"]:
            return cls.zero(field, nvars)
        if len(tokens) % 2:
            raise ValueError("expected coefficient/monomial pairs")
        terms: dict = {}
        for c, mono in zip(tokens[::2], tokens[1::2]):
            e = [0] * nvars
            if mono != "1":
                for factor in mono.split("*"):
                    mt = re.fullmatch(r"X(\d+)(?:\^(\d+))?", factor)
                    if not mt:
                        raise ValueError(f"bad monomial factor {factor!r}")
                    e[int(mt.group(1))] += int(mt.group(2) or 1)
            key = tuple(e)
            terms[key] = field.add(terms.get(key, field.zero()), field.convert(_parse_number(c)))
        return cls(field, nvars, terms)

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, {self.field})"

    __str__ = to_string


def _parse_number(tok: str):
    return Fraction(tok)


def euler_sum(f: Polynomial) -> Polynomial:
    """sum_i X_i * df/dX_i."""
    xs = Polynomial.variables(f.field, f.nvars)
    out = Polynomial.zero(f.field, f.nvars)
    for i, x in enumerate(xs):
        out = out + x * f.diff(i)
    return out


def linear_form(coeffs: Iterable, field: Field, nvars: int = NVARS) -> Polynomial:
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * nvars
        e[i] = 1
        terms[tuple(e)] = field.convert(c)
    return Polynomial(field, nvars, terms)
