"""Palatini quartics built from five skew-symmetric 6x6 matrices.

A 5-tuple of skew forms M_1..M_5 on a 6-dimensional space gives the 5x6
matrix of linear forms A whose k-th row is (M_k X)^T. Because X^T M_k X = 0,
A X = 0 identically, so the signed maximal minors of A form a vector
proportional to X; the factor is the quartic W. The singular curve of W is
the locus where A drops rank to 3, and all ideal computations here are done
with exact linear algebra in fixed degrees.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .field import DEFAULT_PRIME, Field, PrimeField, QQ
from .poly import NVARS, Polynomial, monomial_basis, monomial_index
from .polymatrix import (
    PolyMatrix,
    all_k_minors,
    all_maximal_minors,
    hessian_matrix,
    pfaffian,
)
from .polyspace import PolySpace

N = 6  # dimension of V
K = 5  # dimension of U

EXPECTED_IDEAL_DIMS = {2: 0, 3: 6, 4: 51, 5: 152}
HILBERT_POLYNOMIAL = (25, -25)  # 25t - 25


class PalatiniError(Exception):
    pass


class SkewSystemError(PalatiniError, ValueError):
    pass


class AllMinorsZero(PalatiniError):
    pass


class DivisionFailure(PalatiniError):
    pass


class NotUnique(PalatiniError):
    def __init__(self, dim: int):
        super().__init__(f"solution space has dimension {dim}, expected 1")
        self.dim = dim


class NoSolution(PalatiniError):
    pass


class IdenticallyZero(PalatiniError):
    pass


class GenericityFailure(PalatiniError):
    pass


# ---------------------------------------------------------------------------
# skew systems


@dataclass(frozen=True)
class SkewSystem:
    """Five linearly independent skew-symmetric 6x6 matrices (raw field values)."""

    matrices: Tuple[Tuple[Tuple, ...], ...]
    field: Field = QQ

    def __post_init__(self):
        f = self.field
        mats = tuple(tuple(tuple(f.convert(x) for x in row) for row in m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if len(mats) != K:
            raise SkewSystemError(f"expected {K} matrices, got {len(mats)}")
        for k, m in enumerate(mats):
            if len(m) != N or any(len(r) != N for r in m):
                raise SkewSystemError(f"matrix {k} is not {N}x{N}")
            for i in range(N):
                for j in range(i, N):
                    if m[i][j] != f.neg(m[j][i]):
                        raise SkewSystemError(
                            f"matrix {k} is not skew-symmetric at entry ({i},{j}): "
                            f"{m[i][j]} vs {m[j][i]}"
                        )
        if linalg.rank(self.upper_triangles(), f, comb(N, 2)) != K:
            raise SkewSystemError("the five matrices are linearly dependent")

    def upper_triangles(self) -> List[list]:
        return [[m[i][j] for i in range(N) for j in range(i + 1, N)] for m in self.matrices]

    def combination(self, y: Sequence) -> List[list]:
        """The scalar skew matrix sum_k y_k M_k."""
        f = self.field
        ys = [f.convert(v) for v in y]
        out = [[f.zero()] * N for _ in range(N)]
        for yk, m in zip(ys, self.matrices):
            if f.is_zero(yk):
                continue
            for i in range(N):
                for j in range(N):
                    if not f.is_zero(m[i][j]):
                        out[i][j] = f.add(out[i][j], f.mul(yk, m[i][j]))
        return out

    def recombine(self, g: Sequence[Sequence]) -> "SkewSystem":
        """New basis M'_k = sum_l g[k][l] M_l of the same 5-space."""
        f = self.field
        mats = []
        for row in g:
            mats.append(self.combination(row))
        return SkewSystem(tuple(tuple(tuple(r) for r in m) for m in mats), f)

    def reduce(self, field: PrimeField) -> "SkewSystem":
        return SkewSystem(
            tuple(tuple(tuple(field.convert(x) for x in r) for r in m) for m in self.matrices), field
        )

    def to_json(self) -> dict:
        def out(x):
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("the JSON format carries integer entries only")
                return int(x.numerator)
            return int(x)

        return {
            "field": self.field.descriptor(),
            "matrices": [[[out(x) for x in r] for r in m] for m in self.matrices],
        }


def assemble_A(system: SkewSystem) -> PolyMatrix:
    """5x6 matrix of linear forms with row k equal to (M_k X)^T."""
    f = system.field
    rows = []
    for m in system.matrices:
        row = []
        for j in range(N):
            terms = {}
            for i in range(N):
                c = m[j][i]
                if not f.is_zero(c):
                    e = [0] * N
                    e[i] = 1
                    terms[tuple(e)] = c
            row.append(Polynomial(f, N, terms))
        rows.append(row)
    return PolyMatrix(rows)


# ---------------------------------------------------------------------------
# the quartic


@dataclass(frozen=True)
class PalatiniQuartic:
    W: Polynomial
    system: Optional[SkewSystem] = None
    # v_i = minor_scale * X_i * W for the signed maximal minors v of A
    minor_scale: object = None

    def __post_init__(self):
        if not self.W.is_homogeneous(4) or self.W.is_zero():
            raise ValueError("a Palatini quartic is homogeneous of degree 4")

    @property
    def field(self) -> Field:
        return self.W.field


def extract_quartic(A: PolyMatrix, system: Optional[SkewSystem] = None) -> PalatiniQuartic:
    """W from the signed maximal minors of A, by exact division v_i / X_i."""
    v = all_maximal_minors(A, signed=True)
    xs = Polynomial.variables(A.field, A.nvars)
    if all(vi.is_zero() for vi in v):
        raise AllMinorsZero("all maximal minors of A vanish identically")
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if xs[j] * v[i] != xs[i] * v[j]:
                raise DivisionFailure(f"X{j}*v{i} != X{i}*v{j}")
    i0 = next(i for i, vi in enumerate(v) if not vi.is_zero())
    try:
        raw = v[i0].divide_by_variable(i0)
    except ArithmeticError as exc:
        raise DivisionFailure(str(exc)) from exc
    W = raw.monic()
    scale = raw.leading_coefficient()
    return PalatiniQuartic(W, system, scale)


def quartic_from_system(system: SkewSystem) -> PalatiniQuartic:
    return extract_quartic(assemble_A(system), system)


def jacobian_space(W) -> PolySpace:
    W = _poly(W)
    return PolySpace(3, [W.diff(i) for i in range(W.nvars)], W.field, W.nvars)


def second_partials(W) -> List[Polynomial]:
    W = _poly(W)
    first = [W.diff(i) for i in range(W.nvars)]
    return [first[i].diff(j) for i in range(W.nvars) for j in range(i, W.nvars)]


def catalecticant_rank(W) -> int:
    """Rank of the 21 second partials; 21 means W is apolar to no quadric."""
    W = _poly(W)
    if not W.is_homogeneous(4):
        raise ValueError("catalecticant test needs a quartic")
    return PolySpace(2, second_partials(W), W.field, W.nvars).rank()


def _poly(W) -> Polynomial:
    return W.W if isinstance(W, PalatiniQuartic) else W


def hessian_commutant_dim(W) -> int:
    """dim {A in k^{6x6} : A H = H A^T} for H the Hessian of W."""
    W = _poly(W)
    f = W.field
    n = W.nvars
    H = hessian_matrix(W).entries
    idx = monomial_index(n, 2)
    nq = len(idx)
    # unknown A[i][k] sits in column n*i + k
    rows = []
    for i in range(n):
        for j in range(n):
            block = [[f.zero()] * (n * n) for _ in range(nq)]
            for k in range(n):
                for m, c in H[k][j].terms.items():
                    r = idx[m]
                    block[r][n * i + k] = f.add(block[r][n * i + k], c)
                for m, c in H[i][k].terms.items():
                    r = idx[m]
                    block[r][n * j + k] = f.sub(block[r][n * j + k], c)
            rows.extend(block)
    return n * n - linalg.rank(rows, f, n * n)


def _symmetry_system(G: Sequence[Polynomial]) -> List[list]:
    """Equations on A (6x6) making F_i = sum_a A_ia G_a satisfy dF_i/dX_j = dF_j/dX_i."""
    f = G[0].field
    n = G[0].nvars
    idx = monomial_index(n, 2)
    dG = [[g.diff(j) for j in range(n)] for g in G]
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            block = [[f.zero()] * (n * n) for _ in range(len(idx))]
            for a in range(n):
                for m, c in dG[a][j].terms.items():
                    r = idx[m]
                    block[r][n * i + a] = f.add(block[r][n * i + a], c)
                for m, c in dG[a][i].terms.items():
                    r = idx[m]
                    block[r][n * j + a] = f.sub(block[r][n * j + a], c)
            rows.extend(block)
    return rows


def reconstruct_from_jacobian(J: PolySpace) -> Polynomial:
    """The unique quartic whose partials span J, assembled as (1/4) sum X_i F_i."""
    if J.degree != 3:
        raise ValueError("a jacobian space of a quartic lives in degree 3")
    if J.rank() != J.nvars:
        raise ValueError(f"jacobian space must have rank {J.nvars}, got {J.rank()}")
    f = J.field
    n = J.nvars
    G = J.basis()
    null = linalg.nullspace(_symmetry_system(G), f, n * n)
    if len(null) == 0:
        raise NoSolution("only A = 0 satisfies the symmetry constraints")
    if len(null) != 1:
        raise NotUnique(len(null))
    a = null[0]
    xs = Polynomial.variables(f, n)
    total = Polynomial.zero(f, n)
    for i in range(n):
        Fi = Polynomial.zero(f, n)
        for al in range(n):
            c = a[n * i + al]
            if not f.is_zero(c):
                Fi = Fi + G[al].scale(c)
        total = total + xs[i] * Fi
    return total.scale(f.inv(f.convert(4))).monic()


# ---------------------------------------------------------------------------
# ideal of the singular curve


@dataclass
class SingularCurveProfile:
    dims: Dict[int, int]
    hilbert: Dict[int, int]
    containment: bool
    products_dim: Dict[int, int] = dc_field(default_factory=dict)

    @property
    def flags(self) -> Dict[int, bool]:
        return {d: self.dims.get(d) == e for d, e in EXPECTED_IDEAL_DIMS.items()}

    @property
    def generic(self) -> bool:
        return all(self.flags.values()) and self.containment

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.dims[d] for d in sorted(self.dims))


def ideal_quartics(A: PolyMatrix) -> PolySpace:
    """Span of the 75 4x4 minors of A."""
    return PolySpace(4, all_k_minors(A, 4), A.field, A.nvars)


def _times_variables(space: PolySpace, gens: Sequence[Polynomial]) -> PolySpace:
    xs = Polynomial.variables(space.field, space.nvars)
    return PolySpace(space.degree + 1, [x * g for g in gens for x in xs], space.field, space.nvars)


def quadrics_in_ideal(I3: PolySpace) -> int:
    """dim {q quadric : X_i q in I3 for every i}, as one system in 21 unknowns."""
    f = I3.field
    n = I3.nvars
    red = I3.reducer()
    quads = monomial_basis(n, 2)
    cols = []
    for q in quads:
        col = []
        for i in range(n):
            e = list(q)
            e[i] += 1
            mono = Polynomial(f, n, {tuple(e): f.one()})
            col.extend(red.reduce(mono.coefficient_vector(3)))
        cols.append(col)
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(len(cols[0]))]
    return len(quads) - linalg.rank(rows, f, len(quads))


def singular_ideal_profile(system: SkewSystem, quartic: Optional[PalatiniQuartic] = None) -> SingularCurveProfile:
    A = assemble_A(system)
    if quartic is None:
        quartic = extract_quartic(A, system)
    W = quartic.W
    f = W.field
    I3 = jacobian_space(W)
    I4 = ideal_quartics(A)
    I5 = _times_variables(I4, I4.independent_generators())
    dims = {2: quadrics_in_ideal(I3), 3: I3.rank(), 4: I4.rank(), 5: I5.rank()}
    xs = Polynomial.variables(f, N)
    products = [x * g for g in I3.generators for x in xs]
    # X * I3 lies in I4 iff adjoining the products does not raise the rank
    containment = PolySpace(4, list(I4.generators) + products, f).rank() == dims[4]
    s1_i3 = PolySpace(4, products, f).rank()
    hilbert = {d: comb(d + N - 1, N - 1) - dims[d] for d in dims}
    return SingularCurveProfile(dims, hilbert, containment, {4: s1_i3, 5: dims[5]})


def genericity_certificate(system: SkewSystem, quartic: Optional[PalatiniQuartic] = None) -> Dict[str, int]:
    if quartic is None:
        quartic = quartic_from_system(system)
    return {
        "catalecticant_rank": catalecticant_rank(quartic),
        "dim_I4": ideal_quartics(assemble_A(system)).rank(),
    }


def certificate_ok(cert: Dict[str, int]) -> bool:
    return cert["catalecticant_rank"] == 21 and cert["dim_I4"] == 51


# ---------------------------------------------------------------------------
# dual cubic


@dataclass(frozen=True)
class DualCubic:
    pf: Polynomial
    system: SkewSystem

    def at(self, y: Sequence):
        return self.pf.evaluate(y)


def dual_cubic(system: SkewSystem) -> DualCubic:
    """pfaffian of sum u_k M_k as a cubic in u_1..u_5."""
    f = system.field
    entries = []
    for i in range(N):
        row = []
        for j in range(N):
            terms = {}
            for k, m in enumerate(system.matrices):
                if not f.is_zero(m[i][j]):
                    e = [0] * K
                    e[k] = 1
                    terms[tuple(e)] = m[i][j]
            row.append(Polynomial(f, K, terms))
        entries.append(row)
    pf = pfaffian(PolyMatrix(entries))
    if pf.is_zero():
        raise IdenticallyZero("the pfaffian of the skew pencil vanishes identically")
    return DualCubic(pf, system)


# ---------------------------------------------------------------------------
# fixtures and random systems


def _skew(pairs) -> Tuple[Tuple[int, ...], ...]:
    m = [[0] * N for _ in range(N)]
    for (i, j), c in pairs.items():
        m[i][j] = c
        m[j][i] = -c
    return tuple(tuple(r) for r in m)


FIXTURE_MATRICES = (
    _skew({(0, 1): 1}),
    _skew({(0, 5): -1, (1, 2): 1}),
    _skew({(2, 3): 1}),
    _skew({(3, 4): 1}),
    _skew({(4, 5): 1}),
)

FIXTURE_W = {(0, 1, 1, 1, 1, 0): 1, (1, 0, 0, 1, 1, 1): -1}


def fixture_WM(field: Field = QQ) -> Tuple[SkewSystem, PalatiniQuartic]:
    """The degenerate example X1X2X3X4 - X0X3X4X5 and its five matrices."""
    system = SkewSystem(FIXTURE_MATRICES, field)
    W = Polynomial.from_dict(FIXTURE_W, field)
    return system, PalatiniQuartic(W, system)


def _draw_skew(rng: random.Random, field: Field):
    m = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            if isinstance(field, PrimeField):
                v = rng.randrange(field.p)
            else:
                v = rng.randint(-10, 10)
            m[i][j] = v
            m[j][i] = -v
    return tuple(tuple(r) for r in m)


def draw_system(rng: random.Random, field: Field) -> Optional[SkewSystem]:
    mats = tuple(_draw_skew(rng, field) for _ in range(K))
    try:
        return SkewSystem(mats, field)
    except SkewSystemError:
        return None


def random_system(seed: int, field: Field = None, max_retries: int = 8) -> SkewSystem:
    """A random system passing the genericity certificate (catalecticant 21, dim I4 = 51)."""
    if field is None:
        field = PrimeField(DEFAULT_PRIME)
    rng = random.Random(seed)
    for _ in range(max_retries):
        system = draw_system(rng, field)
        if system is None:
            continue
        try:
            quartic = quartic_from_system(system)
        except AllMinorsZero:
            continue
        if certificate_ok(genericity_certificate(system, quartic)):
            return system
    raise GenericityFailure(f"no generic system after {max_retries} draws (seed {seed})")
