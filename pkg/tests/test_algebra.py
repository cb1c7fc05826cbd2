import pytest
from hypothesis import given, strategies as st

from _util import dual_numbers, group, taft
from hopf_integrals import algebra as alg
from hopf_integrals.algebra import FinDimAlgebra, NonUnitalError, NotAnIdeal
from hopf_integrals.integrals import CoidealSubalgebra
from hopf_integrals.linalg import Subspace, rank
from hopf_integrals.scalars import CyclotomicField
from hopf_integrals.taft import coideal_n_dx, coideal_v_p_beta, hopf_sub_h_d

Q = CyclotomicField(1)


def test_unit_and_taft_products():
    T2 = taft(2)
    A = T2.hopf.algebra
    b = T2.combo({(1, 1): 3, (0, 1): -1})
    assert A.multiply(A.one(), b) == b == A.multiply(b, A.one())
    assert all(c.is_zero() for c in A.multiply(T2.x, T2.x))
    T3 = taft(3)
    w = T3.omega
    assert T3.mul(T3.x, T3.g) == T3.scale(w ** 2, T3.elem(1, 1))
    assert T3.mul(T3.g, T3.x) == T3.elem(1, 1)


def test_associativity_negative_control():
    A = taft(2).hopf.algebra
    assert not A.associativity_failures() and not A.unit_failures()
    table = {(i, j): list(A.table[i][j]) for i in range(A.dim) for j in range(A.dim)}
    table[(1, 2)] = [(k, c * 2) for k, c in table[(1, 2)]]
    bad = FinDimAlgebra(A.field, A.dim, table, A.unit)
    assert bad.associativity_failures()


def test_annihilators_examples():
    D = dual_numbers()
    full = Subspace.full(Q, 2)
    assert alg.right_annihilator(D, full).dim == 0
    t = Subspace(2, [(Q(0), Q(1))], Q)
    assert alg.right_annihilator(D, t) == t
    assert alg.left_annihilator(D, t) == t
    assert alg.check_biannihilator(D, t)
    assert alg.check_biannihilator(D, Subspace.zero(Q, 2))


def test_biannihilator_requires_ideal():
    T = taft(2)
    A = T.hopf.algebra
    with pytest.raises(NotAnIdeal):
        alg.check_biannihilator(A, Subspace(4, [T.g], T.field))


def test_integrals_as_annihilators_on_v_p_beta_n2():
    T = taft(2)
    A = coideal_v_p_beta(T, 1)
    B = A.algebra
    eps = A.counit()
    ker = alg.functional_kernel(B, eps)
    assert alg.right_annihilator(B, ker) == alg.left_integrals(B, eps)
    assert alg.right_annihilator(B, ker).dim == 1


def test_biannihilator_on_h_d():
    for n in (2, 4, 6):
        T = taft(n)
        for d in (1, 2):
            B = hopf_sub_h_d(T, d).algebra
            A = hopf_sub_h_d(T, d)
            ker = alg.functional_kernel(B, A.counit())
            assert alg.check_biannihilator(B, ker, "left")
            assert alg.check_biannihilator(B, ker, "right")


def test_semisimplicity():
    for n in (1, 2, 3, 5):
        assert alg.is_semisimple(group(n).algebra)
    assert not alg.is_semisimple(dual_numbers())
    assert alg.is_semisimple(coideal_v_p_beta(taft(3), 1).algebra)
    assert not alg.is_semisimple(taft(2).hopf.algebra)
    with pytest.raises(NonUnitalError):
        alg.is_semisimple(FinDimAlgebra(Q, 2, [], None))


def test_gram_and_faithfulness():
    D = dual_numbers()
    assert tuple(alg.gram(D, (Q(0), Q(1))).rows) == ((Q(0), Q(1)), (Q(1), Q(0)))
    assert alg.is_faithful_functional(D, (Q(0), Q(1)))
    assert tuple(alg.gram(D, (Q(1), Q(0))).rows) == ((Q(1), Q(0)), (Q(0), Q(0)))
    assert not alg.is_faithful_functional(D, (Q(1), Q(0)))
    one_dim = FinDimAlgebra(Q, 1, [(0, 0, 0, 1)], [1])
    assert alg.is_faithful_functional(one_dim, (Q(1),))


def test_frobenius_search():
    w = alg.frobenius_search(group(2).algebra, rng_seed=0)
    assert w is not None and alg.is_faithful_functional(group(2).algebra, w)
    w = alg.frobenius_search(dual_numbers(), rng_seed=0)
    assert w is not None and not w[1].is_zero()
    # no unit: rejected before any search (a faithful functional forces a unit)
    with pytest.raises(NonUnitalError):
        alg.frobenius_search(FinDimAlgebra(Q, 2, [], None))


def test_frobenius_search_is_seeded():
    A = taft(3).hopf.algebra
    assert alg.frobenius_search(A, rng_seed=7) == alg.frobenius_search(A, rng_seed=7)


def test_multiplicative_functionals():
    T = taft(3)
    for A in (coideal_v_p_beta(T, 2), hopf_sub_h_d(T, 1), coideal_n_dx(T, 3)):
        assert alg.is_multiplicative(A.algebra, A.counit())
        assert not alg.is_multiplicative(A.algebra, tuple(2 * c for c in A.counit()))
    G = group(2).algebra
    assert alg.is_multiplicative(G, (Q(1), Q(-1)))
    assert not alg.is_multiplicative(G, (Q(1), Q(2)))
    with pytest.raises(ValueError):
        alg.left_integrals(G, (Q(1), Q(2)))


@st.composite
def algebra_and_functional(draw):
    n = draw(st.sampled_from([2, 3, 4]))
    T = taft(n)
    A = draw(st.sampled_from([
        lambda: coideal_v_p_beta(T, 1), lambda: hopf_sub_h_d(T, 1),
        lambda: coideal_n_dx(T, n), lambda: CoidealSubalgebra(T.hopf, Subspace.full(T.field, n * n)),
    ]))()
    w = tuple(T.field(draw(st.integers(-3, 3))) for _ in range(A.dim))
    return A.algebra, w


@given(algebra_and_functional())
def test_faithfulness_sides_agree(data):
    B, w = data
    g = alg.gram(B, w)
    assert (rank(g) == B.dim) == (rank(g.transpose()) == B.dim) == alg.is_faithful_functional(B, w)
