import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og4 import perms
from og4.elements import (
    AffineElement,
    PermElement,
    WreathElement,
    make_a5,
    make_psl2,
    small_group_closure,
)
from og4.errors import CapExceeded, NotPrime
from og4.fp import FpMatrix, vec_mat


def rand_affine(rng, p=5, k=3):
    while True:
        M = FpMatrix(p, [[rng.randrange(p) for _ in range(k)] for _ in range(k)])
        if M.is_invertible():
            return AffineElement(p, [rng.randrange(p) for _ in range(k)], M.rows)


def rand_wreath(rng, T, m=4):
    elems = T.elements()
    top = list(range(m))
    rng.shuffle(top)
    return WreathElement([rng.choice(elems) for _ in range(m)], top)


# -- affine -------------------------------------------------------------------------


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_affine_group_axioms(seed):
    rng = random.Random(seed)
    x, y, z = (rand_affine(rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    assert x * x.identity() == x


def test_affine_conjugation_of_translation_is_matrix_action():
    rng = random.Random(1)
    h = rand_affine(rng)
    v = AffineElement.translation((1, 2, 3), 5)
    c = h.inverse() * v * h
    assert c.is_translation()
    assert c.n == vec_mat((1, 2, 3), h.M, 5)


def test_unoriented_affine_g_powers(aff_un_3_5):
    assert aff_un_3_5.checks["g_powers"]


def test_oriented_affine_g_cubed_is_all_ones(aff_or_5_3):
    g = aff_or_5_3.g
    g3 = g**3
    assert g3.is_translation() and g3.n == (1, 1, 1)


# -- wreath -------------------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_wreath_group_axioms(seed):
    T = make_a5()
    rng = random.Random(seed)
    x, y, z = (rand_wreath(rng, T) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    assert (x.inverse() * x).is_identity()


def test_wreath_top_action_on_base():
    # [n^sigma]_j = n_{sigma^-1(j)}
    T = make_a5()
    m = 4
    sigma = (1, 2, 3, 0)
    n = WreathElement([T.a, T.b, T.identity, T.identity])
    s = WreathElement.top_only(sigma, T.degree)
    c = n.conj(s)
    inv = perms.inverse(sigma)
    assert c.x == tuple(n.x[inv[j]] for j in range(m))


def test_n_times_n_sigma_for_r3(A5):
    T = A5
    r = 3
    sigma = tuple([(i + 1) % r for i in range(r)] + [r + (i + 1) % r for i in range(r)])
    e = T.identity
    n = WreathElement([T.a, T.b, e, e, T.b, T.a])
    phi = WreathElement.top_only(tuple(5 - i for i in range(6)), T.degree)
    g = n * WreathElement.top_only(sigma, T.degree)
    x1 = phi * g * phi * g
    assert list(x1.x) == [T.evaluate(w) for w in ["a", "ba", "b", "a", "b", "ab"]]


def test_x2_for_r3(A5, nonab_un_3):
    from og4.strips import compute_X_elements

    X = compute_X_elements(nonab_un_3.instance)
    assert list(X.tuples[1]) == [A5.evaluate(w) for w in ["ab", "b", "bab", "aba", "ba", "ab^2"]]


def test_phi_conjugation_by_g(nonab_or_24):
    named = nonab_or_24.named
    g = nonab_or_24.g
    assert named["phi0"].conj(g) == named["phi1"]
    assert named["phi1"].conj(g) == named["phi2"]


# -- simple groups ------------------------------------------------------------------


def test_a5(A5):
    assert A5.order() == 60
    assert A5.aut_group.order() == 120
    assert (perms.order(A5.a), perms.order(A5.b), perms.order(perms.compose(A5.a, A5.b))) == (2, 3, 5)


@pytest.mark.parametrize("p,order", [(5, 60), (7, 168), (11, 660)])
def test_psl2(p, order):
    T = make_psl2(p)
    assert T.order() == order
    assert perms.order(T.a) == 2 and perms.order(T.b) == 3
    ab = perms.order(perms.compose(T.a, T.b))
    assert ab == p
    assert perms.order(perms.compose(T.b, T.a)) == ab
    assert perms.PermGroup([T.a, T.b]).order() == order
    assert T.aut_group.order() == 2 * order


def test_psl2_needs_prime():
    with pytest.raises(NotPrime):
        make_psl2(9)


def test_word_evaluation(A5):
    a, b = A5.a, A5.b
    assert A5.evaluate("1") == A5.identity
    assert A5.evaluate("ab") == perms.compose(a, b)
    assert A5.evaluate("b^{-1}") == perms.inverse(b)
    assert A5.evaluate("b-") == perms.inverse(b)
    assert A5.evaluate("b2") == A5.evaluate("b^2") == perms.power(b, 2)
    assert A5.evaluate("a^b") == perms.conjugate(a, b)
    assert A5.evaluate("b^{ab^2}") == perms.conjugate(b, A5.evaluate("abb"))
    assert A5.evaluate("(b^{-1})^{ab}") == perms.conjugate(perms.inverse(b), A5.evaluate("ab"))
    with pytest.raises(ValueError):
        A5.evaluate("c")


# -- closures -----------------------------------------------------------------------


def test_closure_of_identity():
    assert len(small_group_closure([PermElement((0, 1, 2))])) == 1


def test_closure_of_unoriented_affine(aff_un_3_5):
    gens = list(aff_un_3_5.S_gens) + [aff_un_3_5.g]
    assert len(small_group_closure(gens)) == 810


def test_closure_of_oriented_affine(aff_or_5_3):
    gens = list(aff_or_5_3.S_gens) + [aff_or_5_3.g]
    assert len(small_group_closure(gens)) == 3000


def test_closure_cap():
    with pytest.raises(CapExceeded):
        small_group_closure([PermElement((1, 2, 3, 4, 0)), PermElement((1, 0, 2, 3, 4))], cap=50)


def test_closure_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        small_group_closure([PermElement((1, 0)), AffineElement.translation((1,), 3)])


def test_hashing_has_no_collisions(aff_or_5_3):
    elems = small_group_closure(list(aff_or_5_3.S_gens) + [aff_or_5_3.g])
    assert len({x.key() for x in elems}) == len(elems)
