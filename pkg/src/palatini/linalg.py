"""Exact dense linear algebra over Q and F_p.

Matrices are lists of rows of raw field values. Over F_p the elimination runs
on int64 numpy arrays (p < 2^31 keeps every product below 2^62). Over Q the
rank uses fraction-free Bareiss elimination on integer rows (large matrices
switch to a certified multimodular rank); reduced echelon forms and kernels
use ``Fraction`` Gauss-Jordan.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm, prod
from typing import List, Sequence, Tuple

import numpy as np
from sympy import prevprime

from .field import Field, PrimeField


def _as_mod_array(rows: Sequence[Sequence], ncols: int, p: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros((0, ncols), dtype=np.int64)
    if isinstance(rows, np.ndarray) and rows.dtype == object:
        return (rows % p).astype(np.int64)
    return np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64).reshape(len(rows), ncols)


def rref_mod_p(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p. Returns (matrix, pivot columns)."""
    a = a.copy() % p
    m, n = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - (col[rows, None] * a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over F_p by forward elimination on the trailing block only."""
    a = a % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if below.size:
            f = a[below, c] * pow(int(a[r, c]), -1, p) % p
            a[below, c:] = (a[below, c:] - (f[:, None] * a[r, c:]) % p) % p
        r += 1
    return r


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for r in rows:
        if all(type(x) is int for x in r):
            out.append(list(r))
            continue
        fr = [Fraction(x) for x in r]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * den) for x in fr])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free elimination (rational rows are scaled to integers)."""
    a = _integer_rows(rows)
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            # exact division: every entry stays a minor of the original matrix
            for j in range(c + 1, n):
                row[j] = (pv * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pv
        r += 1
    return r


def multimodular_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over Q from ranks modulo primes below 2^31.

    rank_Q >= rank_p for every p. If rank_Q exceeded r, some (r+1)-minor would
    be a nonzero integer divisible by every prime where the rank is r, so once
    the product of those primes exceeds the Hadamard bound the rank is r.
    """
    a = _integer_rows(rows)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    norms = sorted((isqrt(sum(x * x for x in r)) + 1 for r in a), reverse=True)
    obj = np.array(a, dtype=object)
    best, modulus, p = -1, 1, 2**31
    while True:
        p = prevprime(p)
        rk = rank_mod_p(_as_mod_array(obj, n, p), p)
        if rk > best:
            best, modulus = rk, 1
        if rk == best:
            modulus *= p
        if best == min(m, n) or modulus > prod(norms[: best + 1]):
            return best


def independent_rows(rows: Sequence[Sequence], field: Field, ncols: int) -> List[int]:
    """Indices of a maximal independent subset of rows (first such in order).

    Over Q the subset is found modulo primes: rows independent mod p are
    independent over Q, and the choice is accepted once it reaches the Q rank.
    """
    if not rows:
        return []
    if isinstance(field, PrimeField):
        return rref_mod_p(_as_mod_array(rows, ncols, field.p).T, field.p)[1]
    a = _integer_rows(rows)
    target = rank(a, field, ncols)
    p = 2**31
    while True:
        p = prevprime(p)
        idx = rref_mod_p(_as_mod_array(a, ncols, p).T, p)[1]
        if len(idx) == target:
            return idx


# above this many entries a Q rank goes through multimodular_rank
BAREISS_MAX_ENTRIES = 20000


def rref_rational(rows: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                ar = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence], field: Field, ncols: int | None = None) -> int:
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    if isinstance(field, PrimeField):
        return rank_mod_p(_as_mod_array(rows, ncols, field.p), field.p)
    if len(rows) * ncols > BAREISS_MAX_ENTRIES:
        return multimodular_rank(rows)
    return bareiss_rank(rows)


def rref(rows: Sequence[Sequence], field: Field, ncols: int | None = None):
    """Nonzero rows of the reduced echelon form (as lists) and pivot columns."""
    if not rows:
        return [], []
    if ncols is None:
        ncols = len(rows[0])
    if isinstance(field, PrimeField):
        a, piv = rref_mod_p(_as_mod_array(rows, ncols, field.p), field.p)
        return [[int(x) for x in row] for row in a[: len(piv)]], piv
    return rref_rational(rows)


def nullspace(rows: Sequence[Sequence], field: Field, ncols: int) -> List[list]:
    """Basis of {x : M x = 0}, one vector per free column, normalized with a 1 there."""
    if not rows:
        return [[field.one() if j == i else field.zero() for j in range(ncols)] for i in range(ncols)]
    red, piv = rref(rows, field, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for row, pc in zip(red, piv):
            v[pc] = field.neg(field.convert(row[fc]))
        basis.append(v)
    return basis


def left_nullspace(rows: Sequence[Sequence], field: Field, ncols: int) -> List[list]:
    """Basis of {y : y^T M = 0} (linear relations among the rows)."""
    m = len(rows)
    if m == 0:
        return []
    transposed = [[rows[i][j] for i in range(m)] for j in range(ncols)]
    return nullspace(transposed, field, m)


class Reducer:
    """Reduction of vectors modulo the row span of a matrix (for membership tests)."""

    def __init__(self, rows: Sequence[Sequence], field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows, self.pivots = rref(rows, field, ncols)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Sequence) -> list:
        f = self.field
        v = [f.convert(x) for x in vec]
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if not f.is_zero(c):
                v = [f.sub(x, f.mul(c, f.convert(y))) for x, y in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return all(self.field.is_zero(x) for x in self.reduce(vec))
