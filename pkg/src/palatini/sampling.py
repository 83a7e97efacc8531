"""Points of W swept by kernel lines, and quartic interpolation through them.

For y on the dual cubic pf(sum y_k M_k) = 0 the skew matrix has rank 4 and
its 2-dimensional kernel is a line of P^5 lying on W. Sampling points on
these lines and solving for the quartics through them recovers W without
any elimination.
"""
from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from . import linalg
from .field import PrimeField
from .poly import Polynomial, monomial_basis
from .quartic import K, N, DualCubic, PalatiniError, PalatiniQuartic, SkewSystem, dual_cubic

Point = Tuple[int, ...]


class ExhaustedRetries(PalatiniError):
    pass


class KernelTooBig(PalatiniError):
    def __init__(self, dim: int):
        super().__init__(f"{dim} independent quartics pass through the points")
        self.dim = dim


class KernelEmpty(PalatiniError):
    pass


def roots_mod_p(coeffs: Sequence[int], p: int) -> List[int]:
    """Sorted roots in F_p of a univariate polynomial (coefficients high to low)."""
    c = [int(x) % p for x in coeffs]
    while c and c[0] == 0:
        c = c[1:]
    if not c:
        raise ValueError("the zero polynomial has every element as a root")
    if len(c) == 1:
        return []
    _, factors = gf_factor(c, p, ZZ)
    return sorted({int(-fac[1]) % p for fac, _ in factors if len(fac) == 2})


def restrict_to_last(cubic: Polynomial, y: Sequence[int], p: int) -> List[int]:
    """Coefficients (high to low) of t -> cubic(y_1, .., y_4, t)."""
    deg = cubic.degree()
    out = [0] * (deg + 1)
    for m, c in cubic.terms.items():
        v = c
        for yk, e in zip(y, m[:-1]):
            if e:
                v = v * pow(yk, e, p) % p
        out[deg - m[-1]] = (out[deg - m[-1]] + v) % p
    return out


def kernel_mod_p(mat: Sequence[Sequence[int]], p: int) -> List[List[int]]:
    return [[int(x) for x in v] for v in linalg.nullspace(mat, PrimeField(p), len(mat[0]))]


def sample_kernel_line_points(
    system: SkewSystem,
    seed: int,
    count: int,
    quartic: Optional[PalatiniQuartic] = None,
    max_draws: Optional[int] = None,
    cubic: Optional[DualCubic] = None,
) -> List[Point]:
    field = system.field
    if not isinstance(field, PrimeField):
        raise ValueError("kernel-line sampling needs a prime field")
    p = field.p
    if cubic is None:
        cubic = dual_cubic(system)
    if max_draws is None:
        max_draws = 100 * count
    rng = random.Random(seed)
    points: List[Point] = []
    draws = 0
    while len(points) < count:
        if draws >= max_draws:
            raise ExhaustedRetries(f"{len(points)} of {count} points after {draws} draws")
        draws += 1
        y = [rng.randrange(p) for _ in range(K - 1)]
        uni = restrict_to_last(cubic.pf, y, p)
        if all(c == 0 for c in uni):
            roots = [rng.randrange(p)]
        else:
            roots = roots_mod_p(uni, p)
        if not roots:
            continue
        y.append(roots[rng.randrange(len(roots))])
        mat = system.combination(y)
        ker = kernel_mod_p(mat, p)
        if len(ker) != 2:
            # rank is not 4: skip the sample
            continue
        u, w = ker
        a, b = rng.randrange(p), rng.randrange(p)
        if a == 0 and b == 0:
            continue
        pt = tuple((a * ui + b * wi) % p for ui, wi in zip(u, w))
        if quartic is not None and not quartic.W.evaluate(pt).is_zero():
            raise PalatiniError(f"kernel-line point {pt} is not on W")
        points.append(pt)
    return points


def evaluation_matrix(points: Sequence[Sequence[int]], p: int, degree: int = 4, nvars: int = N) -> np.ndarray:
    monos = monomial_basis(nvars, degree)
    pts = np.array(points, dtype=np.int64) % p
    cols = []
    for m in monos:
        col = np.ones(len(points), dtype=np.int64)
        for i, e in enumerate(m):
            for _ in range(e):
                col = col * pts[:, i] % p
        cols.append(col)
    return np.stack(cols, axis=1)


def interpolate_quartic(points: Sequence[Sequence[int]], field: PrimeField) -> Polynomial:
    """The unique quartic (monic) through the points, if there is exactly one."""
    p = field.p
    mat = evaluation_matrix(points, p)
    ncols = mat.shape[1]
    _, piv = linalg.rref_mod_p(mat, p)
    dim = ncols - len(piv)
    if dim == 0:
        raise KernelEmpty("no quartic passes through the points")
    if dim > 1:
        raise KernelTooBig(dim)
    vec = linalg.nullspace(mat.tolist(), field, ncols)[0]
    return Polynomial.from_vector(vec, 4, field, N).monic()
