"""Matrices of polynomials: determinants, minors, pfaffians, jacobians, hessians.

Determinants use Laplace expansion along the first row of the selected row
set, memoized on (row subset, column subset), so all minors of one matrix
share their sub-minors.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .field import Field, QQ
from .poly import NVARS, Polynomial


class PolyMatrix:
    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        f0 = rows[0][0]
        for r in rows:
            for e in r:
                if e.field != f0.field or e.nvars != f0.nvars:
                    raise ValueError("entries must share field and variable count")
        self.entries = rows
        self.rows = len(rows)
        self.cols = ncols
        self.field: Field = f0.field
        self.nvars: int = f0.nvars
        self._memo: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Polynomial] = {}

    @classmethod
    def from_scalars(cls, values, field: Field = QQ, nvars: int = NVARS) -> "PolyMatrix":
        return cls([[Polynomial.constant(v, field, nvars) for v in row] for row in values])

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_skew_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = Polynomial.zero(self.field, self.nvars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def apply(self, vec: Sequence[Polynomial]) -> List[Polynomial]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        zero = Polynomial.zero(self.field, self.nvars)
        out = []
        for row in self.entries:
            acc = zero
            for a, b in zip(row, vec):
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return out

    # -- minors ---------------------------------------------------------------

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
        rows = tuple(rows)
        cols = tuple(cols)
        if len(rows) != len(cols):
            raise ValueError("minor needs as many rows as columns")
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not rows:
            res = Polynomial.constant(1, self.field, self.nvars)
        elif len(rows) == 1:
            res = self.entries[rows[0]][cols[0]]
        else:
            r0, rest = rows[0], rows[1:]
            res = Polynomial.zero(self.field, self.nvars)
            for k, c in enumerate(cols):
                a = self.entries[r0][c]
                if not a.terms:
                    continue
                sub = self.minor(rest, cols[:k] + cols[k + 1:])
                if not sub.terms:
                    continue
                term = a * sub
                res = res - term if k % 2 else res + term
        self._memo[key] = res
        return res


def determinant(m: PolyMatrix) -> Polynomial:
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows > 8:
        raise ValueError("Laplace expansion is limited to size 8")
    return m.minor(range(m.rows), range(m.cols))


def all_maximal_minors(m: PolyMatrix, signed: bool = False) -> List[Polynomial]:
    """Maximal minors of a wide matrix.

    Unsigned: one per column subset, lexicographic order of the subsets.
    Signed (only for ``cols == rows + 1``): the cofactor vector
    ``v_i = (-1)^i det(M without column i)``, which satisfies ``M v = 0``.
    """
    if m.rows >= m.cols:
        raise ValueError("maximal minors need rows < cols")
    rows = tuple(range(m.rows))
    if not signed:
        return [m.minor(rows, cs) for cs in combinations(range(m.cols), m.rows)]
    if m.cols != m.rows + 1:
        raise ValueError("the signed cofactor vector needs cols == rows + 1")
    out = []
    for i in range(m.cols):
        cs = tuple(c for c in range(m.cols) if c != i)
        v = m.minor(rows, cs)
        out.append(-v if i % 2 else v)
    return out


def all_k_minors(m: PolyMatrix, k: int) -> List[Polynomial]:
    """All k x k minors, row subsets outer and column subsets inner, both lexicographic."""
    if not 1 <= k <= min(m.rows, m.cols):
        raise ValueError(f"minor size {k} out of range for a {m.rows}x{m.cols} matrix")
    return [
        m.minor(rs, cs)
        for rs in combinations(range(m.rows), k)
        for cs in combinations(range(m.cols), k)
    ]


def pfaffian(m: PolyMatrix) -> Polynomial:
    """Pfaffian by expansion along the first row; pf([[0, a], [-a, 0]]) = a."""
    if m.rows != m.cols:
        raise ValueError("pfaffian of a non-square matrix")
    if m.rows % 2:
        raise ValueError("pfaffian of an odd-size matrix")
    if m.rows > 8:
        raise ValueError("pfaffian expansion is limited to size 8")
    if not m.is_skew_symmetric():
        raise ValueError("pfaffian of a matrix that is not skew-symmetric")
    memo: Dict[Tuple[int, ...], Polynomial] = {}
    one = Polynomial.constant(1, m.field, m.nvars)

    def pf(idx: Tuple[int, ...]) -> Polynomial:
        if not idx:
            return one
        if idx in memo:
            return memo[idx]
        i0 = idx[0]
        res = Polynomial.zero(m.field, m.nvars)
        for k in range(1, len(idx)):
            a = m.entries[i0][idx[k]]
            if not a.terms:
                continue
            term = a * pf(idx[1:k] + idx[k + 1:])
            res = res - term if k % 2 == 0 else res + term
        memo[idx] = res
        return res

    return pf(tuple(range(m.rows)))


def jacobian_matrix(fs: Sequence[Polynomial]) -> PolyMatrix:
    return PolyMatrix([[f.diff(j) for j in range(f.nvars)] for f in fs])


def hessian_matrix(f: Polynomial) -> PolyMatrix:
    first = [f.diff(i) for i in range(f.nvars)]
    rows = [[None] * f.nvars for _ in range(f.nvars)]
    for i in range(f.nvars):
        for j in range(i, f.nvars):
            rows[i][j] = rows[j][i] = first[i].diff(j)
    return PolyMatrix(rows)
