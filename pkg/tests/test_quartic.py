import random

import pytest
import sympy

from palatini.field import GF, QQ
from palatini.poly import Polynomial, monomial_basis
from palatini.polymatrix import PolyMatrix, all_k_minors, all_maximal_minors, pfaffian
from palatini.polyspace import PolySpace
from palatini.quartic import (
    FIXTURE_MATRICES,
    AllMinorsZero,
    GenericityFailure,
    IdenticallyZero,
    NoSolution,
    NotUnique,
    SkewSystem,
    SkewSystemError,
    assemble_A,
    catalecticant_rank,
    certificate_ok,
    dual_cubic,
    extract_quartic,
    fixture_WM,
    genericity_certificate,
    hessian_commutant_dim,
    jacobian_space,
    quartic_from_system,
    random_system,
    reconstruct_from_jacobian,
    second_partials,
    singular_ideal_profile,
)

F = GF(32003)
X = Polynomial.variables(QQ)


def skew(pairs, n=6):
    m = [[0] * n for _ in range(n)]
    for (i, j), c in pairs.items():
        m[i][j] = c
        m[j][i] = -c
    return m


def common_kernel_system(field=QQ):
    """Five independent skew matrices supported on rows/columns 0..3."""
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
    return SkewSystem(tuple(skew({ij: 1}) for ij in pairs), field)


def sympy_rank(polys, degree):
    rows = [[sympy.Rational(c.numerator, c.denominator) for c in p.coefficient_vector(degree)] for p in polys]
    return sympy.Matrix(rows).rank()


# -- SkewSystem --------------------------------------------------------------------------


def test_fixture_matrices_entries():
    M1, M2, M3, M4, M5 = FIXTURE_MATRICES
    assert M1[0][1] == 1 and M1[1][0] == -1
    assert M2[0][5] == -1 and M2[1][2] == 1
    assert M3[2][3] == 1 and M4[3][4] == 1 and M5[4][5] == 1
    nonzero = sum(1 for m in FIXTURE_MATRICES for r in m for x in r if x)
    assert nonzero == 12


def test_non_skew_matrix_is_rejected_with_entry():
    mats = [list(map(list, m)) for m in FIXTURE_MATRICES]
    mats[2][4][1] = 7
    with pytest.raises(SkewSystemError, match=r"matrix 2 .*\(1,4\)"):
        SkewSystem(tuple(tuple(map(tuple, m)) for m in mats))


def test_nonzero_diagonal_is_rejected():
    mats = [list(map(list, m)) for m in FIXTURE_MATRICES]
    mats[0][3][3] = 1
    with pytest.raises(SkewSystemError, match="skew"):
        SkewSystem(tuple(tuple(map(tuple, m)) for m in mats))


def test_dependent_matrices_are_rejected():
    m1 = FIXTURE_MATRICES[0]
    with pytest.raises(SkewSystemError, match="dependent"):
        SkewSystem((m1, m1) + FIXTURE_MATRICES[2:])


def test_wrong_number_of_matrices():
    with pytest.raises(SkewSystemError):
        SkewSystem(FIXTURE_MATRICES[:4])


# -- assemble_A and extract_quartic --------------------------------------------------------


def test_fixture_A_matches_displayed_matrix():
    A = assemble_A(fixture_WM()[0])
    z = Polynomial.zero(QQ)
    assert A.entries[0] == [X[1], -X[0], z, z, z, z]
    assert A.entries[1] == [-X[5], X[2], -X[1], z, z, X[0]]
    assert A.entries[2] == [z, z, X[3], -X[2], z, z]
    assert A.entries[3] == [z, z, z, X[4], -X[3], z]
    assert A.entries[4] == [z, z, z, z, X[5], -X[4]]


def test_A_kills_X(generic):
    for system in (fixture_WM()[0], generic.system(1)):
        A = assemble_A(system)
        assert all(p.is_zero() for p in A.apply(Polynomial.variables(system.field)))


def test_extract_fixture_quartic():
    system, wm = fixture_WM()
    q = extract_quartic(assemble_A(system), system)
    assert q.W == wm.W
    assert q.W.to_string() == "1 X1*X2*X3*X4 -1 X0*X3*X4*X5"


def test_signed_minors_are_scale_times_xi_w(generic):
    q = generic.quartic(2)
    v = all_maximal_minors(assemble_A(q.system), signed=True)
    xs = Polynomial.variables(F)
    for i in range(6):
        assert v[i] == (xs[i] * q.W).scale(q.minor_scale)


def test_extract_random_quartic(generic):
    q = generic.quartic(1)
    assert q.W.is_homogeneous(4) and q.W.degree() == 4
    assert q.W.leading_coefficient() == 1
    assert jacobian_space(q).rank() == 6


def test_all_minors_zero_on_common_kernel_system():
    system = common_kernel_system()
    A = assemble_A(system)
    assert all(v.is_zero() for v in all_maximal_minors(A))
    with pytest.raises(AllMinorsZero):
        extract_quartic(A, system)


# -- jacobian space and catalecticant --------------------------------------------------------


def test_jacobian_space_ranks(generic):
    assert jacobian_space(fixture_WM()[1]).rank() == 6
    assert jacobian_space(X[0] ** 4).rank() == 1
    assert jacobian_space(generic.quartic(3)).rank() == 6


def test_catalecticant_of_cone():
    assert catalecticant_rank(X[0] ** 4) == 1


def test_catalecticant_of_fixture_matches_sympy():
    W = fixture_WM()[1].W
    assert catalecticant_rank(W) == sympy_rank(second_partials(W), 2)


def test_catalecticant_of_random_quartic(generic):
    assert catalecticant_rank(generic.quartic(1)) == 21


def test_catalecticant_needs_quartic():
    with pytest.raises(ValueError):
        catalecticant_rank(X[0] ** 3)


# -- profile -----------------------------------------------------------------------------------


def test_random_profile(generic):
    prof = singular_ideal_profile(generic.system(1), generic.quartic(1))
    assert prof.as_tuple() == (0, 6, 51, 152)
    assert (prof.hilbert[3], prof.hilbert[4]) == (50, 75)
    assert prof.containment
    assert prof.generic
    # S_1 * I_d sits inside I_{d+1}
    assert prof.products_dim[4] <= prof.dims[4]


def test_fixture_profile_is_flagged_non_generic():
    system, wm = fixture_WM()
    prof = singular_ideal_profile(system, wm)
    assert not prof.generic
    assert prof.dims[3] == 6
    assert prof.dims[4] == sympy_rank(all_k_minors(assemble_A(system), 4), 4)
    assert prof.dims[4] != 51
    assert prof.flags[3] and not prof.flags[4]


def test_profile_agrees_over_q_and_mod_p_for_fixture():
    system_q, wm_q = fixture_WM(QQ)
    system_p, wm_p = fixture_WM(F)
    assert singular_ideal_profile(system_q, wm_q).dims == singular_ideal_profile(system_p, wm_p).dims


# -- hessian commutant and reconstruction ---------------------------------------------------------


def test_commutant_of_fixture_is_scalars():
    assert hessian_commutant_dim(fixture_WM()[1]) == 1


def test_commutant_of_cone_is_large():
    assert hessian_commutant_dim(X[0] ** 4) > 1


def test_commutant_of_random_quartic(generic):
    assert hessian_commutant_dim(generic.quartic(1)) == 1


def test_reconstruct_fixture():
    wm = fixture_WM()[1]
    assert reconstruct_from_jacobian(jacobian_space(wm)) == wm.W


def test_reconstruct_round_trip(generic):
    for seed in (1, 2):
        q = generic.quartic(seed)
        assert reconstruct_from_jacobian(jacobian_space(q)) == q.W


def test_reconstruct_decoupled_cubes_not_unique():
    J = PolySpace(3, [x ** 3 for x in X], QQ)
    with pytest.raises(NotUnique) as exc:
        reconstruct_from_jacobian(J)
    assert exc.value.dim == 6


def test_reconstruct_generic_cubics_have_no_solution():
    rng = random.Random(4)
    monos = monomial_basis(6, 3)
    gens = [Polynomial.from_dict({m: rng.randrange(32003) for m in monos}, F) for _ in range(6)]
    with pytest.raises(NoSolution):
        reconstruct_from_jacobian(PolySpace(3, gens, F))


def test_reconstruct_needs_rank_six():
    with pytest.raises(ValueError):
        reconstruct_from_jacobian(PolySpace(3, [X[0] ** 3] * 6, QQ))


# -- dual cubic ----------------------------------------------------------------------------------


def pencil_pfaffian(system, y):
    m = system.combination(y)
    return pfaffian(PolyMatrix.from_scalars(m, system.field, 1)).coeff((0,)).value


def test_dual_cubic_of_fixture_at_random_points():
    system = fixture_WM(F)[0]
    cubic = dual_cubic(system)
    assert cubic.pf.degree() == 3 and cubic.pf.nvars == 5
    rng = random.Random(20)
    for _ in range(20):
        y = [rng.randrange(32003) for _ in range(5)]
        assert cubic.at(y).value == pencil_pfaffian(system, y)


def test_dual_cubic_of_random_system(generic):
    system = generic.system(1)
    cubic = dual_cubic(system)
    rng = random.Random(50)
    for _ in range(50):
        y = [rng.randrange(32003) for _ in range(5)]
        assert cubic.at(y).value == pencil_pfaffian(system, y)


def test_dual_cubic_identically_zero():
    with pytest.raises(IdenticallyZero):
        dual_cubic(common_kernel_system())


# -- random systems --------------------------------------------------------------------------------


def test_random_system_is_deterministic(generic):
    assert random_system(1, F) == generic.system(1)
    assert random_system(1, F) != random_system(2, F)


def test_random_system_gives_up():
    with pytest.raises(GenericityFailure):
        random_system(1, F, max_retries=0)


def test_rational_certificate_matches_its_reduction():
    system = random_system(1, QQ)
    assert all(abs(x) <= 10 for m in system.matrices for r in m for x in r)
    cert_q = genericity_certificate(system)
    cert_p = genericity_certificate(system.reduce(F))
    assert cert_q == cert_p == {"catalecticant_rank": 21, "dim_I4": 51}


def test_second_prime(generic):
    system = generic.system(1, 31991)
    q = generic.quartic(1, 31991)
    assert certificate_ok(genericity_certificate(system, q))
    assert singular_ideal_profile(system, q).as_tuple() == (0, 6, 51, 152)
    assert hessian_commutant_dim(q) == 1


def test_basis_recombination_leaves_w_unchanged(generic):
    system = generic.system(1)
    rng = random.Random(9)
    while True:
        g = [[rng.randrange(32003) for _ in range(5)] for _ in range(5)]
        if sympy.Matrix(g).det() % 32003:
            break
    assert quartic_from_system(system.recombine(g)).W == generic.quartic(1).W
