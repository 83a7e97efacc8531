"""Finite spans of same-degree polynomials with exact rank and kernel."""
from __future__ import annotations

from typing import List, Sequence

from . import linalg
from .field import Field
from .poly import NVARS, Polynomial, num_monomials


class PolySpace:
    """Span of homogeneous polynomials of one degree. Zero generators are allowed."""

    def __init__(self, degree: int, generators: Sequence[Polynomial], field: Field, nvars: int = NVARS):
        gens = tuple(generators)
        for g in gens:
            if g.field != field:
                raise ValueError(f"generator over {g.field}, space over {field}")
            if not g.is_homogeneous(degree):
                raise ValueError(f"generator {g} is not homogeneous of degree {degree}")
        self.degree = degree
        self.generators = gens
        self.field = field
        self.nvars = nvars
        self._cache: dict = {}

    @property
    def ncols(self) -> int:
        return num_monomials(self.nvars, self.degree)

    def matrix(self) -> List[list]:
        return [g.coefficient_vector(self.degree) for g in self.generators]

    def rank(self) -> int:
        if "rank" not in self._cache:
            self._cache["rank"] = linalg.rank(self.matrix(), self.field, self.ncols)
        return self._cache["rank"]

    def kernel(self) -> List[list]:
        """Linear relations c with sum c_i g_i = 0."""
        return linalg.left_nullspace(self.matrix(), self.field, self.ncols)

    def reducer(self) -> linalg.Reducer:
        if "reducer" not in self._cache:
            self._cache["reducer"] = linalg.Reducer(self.matrix(), self.field, self.ncols)
        return self._cache["reducer"]

    def basis(self) -> List[Polynomial]:
        """Echelon basis of the span (independent polynomials)."""
        red = self.reducer()
        return [Polynomial.from_vector(r, self.degree, self.field, self.nvars) for r in red.rows]

    def independent_generators(self) -> List[Polynomial]:
        """A maximal independent subset of the generators (a basis of the span)."""
        idx = linalg.independent_rows(self.matrix(), self.field, self.ncols)
        return [self.generators[i] for i in idx]

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not f.is_homogeneous(self.degree):
            return False
        return self.reducer().contains(f.coefficient_vector(self.degree))

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"PolySpace(degree={self.degree}, {len(self.generators)} generators, {self.field})"


def space_rank(space: PolySpace) -> int:
    return space.rank()


def space_kernel(space: PolySpace) -> List[list]:
    return space.kernel()
