import random

import pytest
from hypothesis import given, settings, strategies as st

from palatini.field import GF, QQ
from palatini.poly import Polynomial
from palatini.polymatrix import (
    PolyMatrix,
    all_k_minors,
    all_maximal_minors,
    determinant,
    hessian_matrix,
    jacobian_matrix,
    pfaffian,
)
from palatini.quartic import assemble_A, fixture_WM

F = GF(32003)
X = Polynomial.variables(QQ)
_, WM = fixture_WM()
W = WM.W


def scalar(poly):
    return poly.coeff((0,) * poly.nvars).value


def random_skew(rng, n, field=F, nvars=6, entry=None):
    entry = entry or (lambda: Polynomial.constant(rng.randrange(32003), field, nvars))
    zero = Polynomial.zero(field, nvars)
    m = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = entry()
            m[i][j] = e
            m[j][i] = -e
    return PolyMatrix(m)


def random_linear(rng, field, nvars):
    return Polynomial(field, nvars, {
        tuple(int(k == i) for k in range(nvars)): field.convert(rng.randint(-3, 3)) for i in range(nvars)
    })


# -- determinant ---------------------------------------------------------------------


def test_identity_determinant():
    assert determinant(PolyMatrix.from_scalars([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == Polynomial.constant(1)


def test_diagonal_determinant():
    z = Polynomial.zero(QQ)
    m = PolyMatrix([[X[0], z, z], [z, X[1], z], [z, z, X[2]]])
    assert determinant(m) == X[0] * X[1] * X[2]


def test_non_square_determinant_is_an_error():
    with pytest.raises(ValueError):
        determinant(PolyMatrix.from_scalars([[1, 2, 3], [4, 5, 6]]))


def test_fixture_minor_deleting_column_zero():
    A = assemble_A(fixture_WM()[0])
    d = A.minor(range(5), (1, 2, 3, 4, 5))
    assert d == X[0] * W or d == -(X[0] * W)


@settings(max_examples=50)
@given(st.randoms(use_true_random=False), st.integers(2, 5))
def test_determinant_is_alternating(rnd, n):
    rows = [[rnd.randint(-9, 9) for _ in range(n)] for _ in range(n)]
    d = determinant(PolyMatrix.from_scalars(rows, nvars=1))
    i, j = rnd.sample(range(n), 2)
    swapped = [r[:] for r in rows]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert determinant(PolyMatrix.from_scalars(swapped, nvars=1)) == -d
    repeated = [r[:] for r in rows]
    repeated[j] = repeated[i][:]
    assert determinant(PolyMatrix.from_scalars(repeated, nvars=1)).is_zero()


# -- minors -------------------------------------------------------------------------------


def test_fixture_maximal_minors_are_multiples_of_w():
    A = assemble_A(fixture_WM()[0])
    v = all_maximal_minors(A, signed=True)
    signs = set()
    for i, vi in enumerate(v):
        t = X[i] * W
        assert vi in (t, -t)
        signs.add(vi == t)
    assert len(signs) == 1
    # A v = 0 identically
    assert all(p.is_zero() for p in A.apply(v))


def test_scalar_maximal_minors():
    m = PolyMatrix.from_scalars([[1, 0, 0], [0, 1, 0]], nvars=1)
    vals = [scalar(p) for p in all_maximal_minors(m)]
    # column subsets (0,1), (0,2), (1,2)
    assert [abs(v) for v in vals] == [1, 0, 0]
    signed = [scalar(p) for p in all_maximal_minors(m, signed=True)]
    assert [abs(v) for v in signed] == [0, 0, 1]


def test_rank_four_scalar_matrix_has_vanishing_maximal_minors():
    rng = random.Random(11)
    a = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(5)]
    b = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(4)]
    rows = [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(6)] for i in range(5)]
    assert all(p.is_zero() for p in all_maximal_minors(PolyMatrix.from_scalars(rows, nvars=1)))


def test_maximal_minor_shape_errors():
    with pytest.raises(ValueError):
        all_maximal_minors(PolyMatrix.from_scalars([[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        all_maximal_minors(PolyMatrix.from_scalars([[1, 0, 0, 0]]), signed=True)


def test_k_minor_count_and_order():
    A = assemble_A(fixture_WM()[0])
    assert len(all_k_minors(A, 4)) == 75
    m = PolyMatrix.from_scalars([[1, 0], [0, 1]], nvars=1)
    assert [scalar(p) for p in all_k_minors(m, 1)] == [1, 0, 0, 1]
    with pytest.raises(ValueError):
        all_k_minors(m, 3)


def test_fixture_four_minors_on_singular_points():
    A = assemble_A(fixture_WM()[0])
    minors = all_k_minors(A, 4)

    def singular(pt):
        return all(W.diff(i).evaluate(pt) == 0 for i in range(6))

    # points where A drops to rank <= 3: every 4x4 minor vanishes
    low_rank = [[0, 0, 0, 1, 1, 0], [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0]]
    for pt in low_rank:
        assert singular(pt)
        assert all(m.evaluate(pt) == 0 for m in minors)
    # W_M is reducible, so its singular locus also contains the surface
    # X3 = X4 = 0, X1X2 = X0X5 where A keeps rank 4
    pt = [1, 2, 3, 0, 0, 6]
    assert singular(pt)
    assert any(m.evaluate(pt) != 0 for m in minors)


# -- pfaffian -------------------------------------------------------------------------------


def test_pfaffian_two_by_two():
    a = X[0]
    m = PolyMatrix([[Polynomial.zero(QQ), a], [-a, Polynomial.zero(QQ)]])
    assert pfaffian(m) == a
    assert pfaffian(PolyMatrix.from_scalars([[0, 1], [-1, 0]])) == Polynomial.constant(1)


def test_pfaffian_of_block_diagonal():
    z = Polynomial.zero(QQ)
    a, b, c = X[0], X[1], X[2]
    m = [[z] * 6 for _ in range(6)]
    for k, e in enumerate((a, b, c)):
        m[2 * k][2 * k + 1] = e
        m[2 * k + 1][2 * k] = -e
    assert pfaffian(PolyMatrix(m)) == a * b * c


def test_pfaffian_errors():
    with pytest.raises(ValueError, match="odd"):
        pfaffian(PolyMatrix.from_scalars([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]))
    with pytest.raises(ValueError, match="skew"):
        pfaffian(PolyMatrix.from_scalars([[0, 1], [1, 0]]))


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from([2, 4, 6]))
def test_pfaffian_squared_is_determinant_scalar(rnd, n):
    m = random_skew(rnd, n, nvars=1)
    assert pfaffian(m) * pfaffian(m) == determinant(m)


@settings(max_examples=15, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from([2, 4, 6]))
def test_pfaffian_squared_is_determinant_polynomial(rnd, n):
    m = random_skew(rnd, n, QQ, 3, entry=lambda: random_linear(rnd, QQ, 3))
    assert pfaffian(m) * pfaffian(m) == determinant(m)


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_pfaffian_congruence(rnd):
    m = random_skew(rnd, 6, nvars=1)
    P = PolyMatrix.from_scalars([[rnd.randrange(32003) for _ in range(6)] for _ in range(6)], F, 1)
    congr = P.transpose().matmul(m).matmul(P)
    assert pfaffian(congr) == determinant(P) * pfaffian(m)


# -- jacobian and hessian -------------------------------------------------------------------


def test_hessian_of_square():
    H = hessian_matrix(X[0] ** 2)
    nonzero = [(i, j) for i in range(6) for j in range(6) if not H[i, j].is_zero()]
    assert nonzero == [(0, 0)]
    assert H[0, 0] == Polynomial.constant(2)


def test_hessian_of_fixture_quartic():
    H = hessian_matrix(W)
    assert H.is_symmetric()
    assert H[0, 5] == -(X[3] * X[4])


def test_jacobian_row_is_the_partials():
    J = jacobian_matrix([W])
    assert (J.rows, J.cols) == (1, 6)
    assert [J[0, j] for j in range(6)] == [W.diff(j) for j in range(6)]


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_hessian_is_symmetric(rnd):
    f = Polynomial.zero(F)
    for _ in range(6):
        e = [0] * 6
        for _ in range(4):
            e[rnd.randrange(6)] += 1
        f = f + Polynomial.from_dict({tuple(e): rnd.randrange(1, 32003)}, F)
    assert hessian_matrix(f).is_symmetric()


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        PolyMatrix([[Polynomial.variable(0, QQ), Polynomial.variable(0, F)]])
