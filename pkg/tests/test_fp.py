from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og4 import fp
from og4.errors import NotCoprime, NotMonic, TooLarge
from og4.fp import FpMatrix, FpPoly, FpVector


def brute_order(p, r):
    k, x = 1, p % r
    while x != 1:
        x = x * p % r
        k += 1
    return k


def brute_irreducible(f: FpPoly) -> bool:
    """No monic factor of degree 1..deg/2 divides f."""
    p, d = f.p, f.degree
    for e in range(1, d // 2 + 1):
        for low in product(range(p), repeat=e):
            g = FpPoly(p, list(low) + [1])
            if (f % g).is_zero():
                return False
    return True


# -- vectors, matrices, polynomials ------------------------------------------------


def test_vector_arithmetic():
    v, w = FpVector(5, (1, 2, 3)), FpVector(5, (4, 4, 4))
    assert (v + w).entries == (0, 1, 2)
    assert (v - w).entries == (2, 3, 4)
    assert v.scale(2).entries == (2, 4, 1)
    assert (v - v).is_zero()


def test_residues_are_normalized():
    assert FpMatrix(3, ((-1, 0), (0, 4))).rows == ((2, 0), (0, 1))


@settings(max_examples=50)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.data())
def test_matrix_inverse(p, k, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=k, max_size=k), min_size=k, max_size=k))
    M = FpMatrix(p, rows)
    if M.is_invertible():
        assert (M @ M.inverse()).is_identity()
        assert (M ** -1) == M.inverse()
    else:
        assert fp.rank(M.rows, p) < k


def test_poly_division():
    f = FpPoly(3, [2, 0, 1])  # X^2 - 1
    q, r = divmod(f, FpPoly(3, [2, 1]))  # X - 1
    assert r.is_zero()
    assert q.coeffs == (1, 1)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=6), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_poly_divmod_identity(a, b):
    f, g = FpPoly(5, a), FpPoly(5, b)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


# -- companion matrices ------------------------------------------------------------


def test_companion_degree_one():
    assert fp.companion_matrix(FpPoly(3, [-1, 1])).rows == ((1,),)


def test_companion_quadratic_layout():
    assert fp.companion_matrix(FpPoly(5, [1, 1, 1])).rows == ((0, 4), (1, 4))


def test_companion_of_repunit_has_order_r():
    C = fp.companion_matrix(fp.repunit_poly(3, 4))
    assert C.dim == 4
    assert C.order() == 5


def test_companion_rejects_non_monic():
    with pytest.raises(NotMonic):
        fp.companion_matrix(FpPoly(5, [1, 2]).__mul__(FpPoly(5, [2])))


@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_companion_is_annihilated_by_its_polynomial(p, low):
    f = FpPoly(p, [c % p for c in low] + [1])
    C = fp.companion_matrix(f)
    assert all(x == 0 for row in C.evaluate(f).rows for x in row)


# -- irreducibility ----------------------------------------------------------------


@pytest.mark.parametrize(
    "p,coeffs,expected",
    [(3, [1, 0, 1], True), (3, [-1, 0, 1], False), (3, [1, 1, 1, 1, 1], True)],
)
def test_is_irreducible_examples(p, coeffs, expected):
    f = FpPoly(p, coeffs)
    assert fp.is_irreducible(f) is expected
    assert brute_irreducible(f) is expected


@settings(max_examples=80)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_is_irreducible_matches_factor_search(p, low):
    f = FpPoly(p, [c % p for c in low] + [1])
    assert fp.is_irreducible(f) == brute_irreducible(f)


@pytest.mark.parametrize("r", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_primitive_root_iff_repunit_irreducible(p, r):
    if p == r:
        return
    assert fp.is_primitive_root(p, r) == fp.is_irreducible(fp.repunit_poly(p, r - 1))


# -- modular arithmetic ------------------------------------------------------------


@pytest.mark.parametrize("p,r,k", [(3, 5, 4), (2, 3, 2), (5, 7, 6)])
def test_multiplicative_order_examples(p, r, k):
    assert fp.multiplicative_order(p, r) == k


def test_multiplicative_order_needs_coprime():
    with pytest.raises(NotCoprime):
        fp.multiplicative_order(3, 6)


@pytest.mark.parametrize("p,r,expected", [(3, 5, True), (3, 7, True), (2, 7, False), (3, 13, False)])
def test_primitive_root_examples(p, r, expected):
    assert fp.is_primitive_root(p, r) is expected


@pytest.mark.parametrize("a,m,n", [(2, 6, 4), (5, 7, 7), (3, 4, 6)])
def test_gcd_power_identity_examples(a, m, n):
    assert fp.gcd_power_identity_check(a, m, n)
    assert gcd(a**m - 1, a**n - 1) == a ** gcd(m, n) - 1


def test_euler_phi():
    assert [fp.euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("p,r,degrees", [(3, 5, {4}), (2, 3, {2}), (5, 3, {2}), (2, 7, {3, 6})])
def test_dihedral_rep_degrees(p, r, degrees):
    assert fp.dihedral_rep_degrees(p, r) == degrees


def test_dihedral_rep_degrees_needs_r_at_least_3():
    with pytest.raises(ValueError):
        fp.dihedral_rep_degrees(3, 2)


# -- module irreducibility by spinning ------------------------------------------------


def test_identity_probe_is_reducible():
    I = FpMatrix.identity(3, 2)
    W = fp.find_invariant_subspace([I])
    assert W is not None and len(W) == 1
    assert not fp.exhaustive_irreducibility([I])


def test_sigma_of_unoriented_affine_is_irreducible():
    C = fp.companion_matrix(fp.repunit_poly(3, 4))
    assert fp.exhaustive_irreducibility([C])


def test_oriented_affine_module_is_irreducible():
    gens = [fp.cyclic_permutation_matrix(5, 3)] + [fp.diagonal_sign(5, 3, i) for i in range(3)]
    assert fp.exhaustive_irreducibility(gens)


def test_cyclic_matrix_alone_is_reducible():
    # the all-ones line is fixed by a permutation matrix
    W = fp.find_invariant_subspace([fp.cyclic_permutation_matrix(5, 3)])
    assert W is not None
    for M in [fp.cyclic_permutation_matrix(5, 3)]:
        for w in W:
            assert fp.rank(W + [list(fp.vec_mat(w, M.rows, 5))], 5) == len(W)


def test_spin_refuses_large_spaces():
    with pytest.raises(TooLarge):
        fp.find_invariant_subspace([FpMatrix.identity(11, 6)])
