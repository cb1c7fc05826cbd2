from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from _util import TAFT_NS, betas, divisors, families, taft
from hopf_integrals import algebra as alg
from hopf_integrals.hopf import dense, sparse_tensor_product, tensor
from hopf_integrals.linalg import Subspace
from hopf_integrals.scalars import omega
from hopf_integrals.taft import (
    build_taft,
    coideal_n_dx,
    coideal_v_p_beta,
    cointegral_tables,
    delta_x_power,
    gaussian_binomial,
    hopf_sub_h_d,
    lambda_dx,
    normal_form,
    p_beta,
    p_d,
    y_powers,
)


@given(st.text(alphabet="gx", max_size=12), st.integers(2, 6))
def test_normal_form_against_inversion_count(word, n):
    # each x standing left of a g contributes one factor w^{-1}
    inversions = sum(1 for a, b in product(range(len(word)), repeat=2)
                     if a < b and word[a] == "x" and word[b] == "g")
    j = word.count("x")
    expected = None if j >= n else ((-inversions) % n, word.count("g") % n, j)
    assert normal_form(word, n) == expected


def test_build_rejects_small_n():
    with pytest.raises(ValueError):
        build_taft(1)


def test_relations():
    for n in TAFT_NS:
        T = taft(n)
        assert T.power(T.g, n) == T.one()
        assert all(c.is_zero() for c in T.power(T.x, n))
        # g x g^{-1} = w x
        assert T.mul(T.g, T.x, T.elem(n - 1)) == T.scale(T.omega, T.x)
        assert T.hopf.eps(T.x) == 0 and T.hopf.eps(T.g) == 1


def _q_binomial_product(k, j, q):
    num, den = 1, 1
    for i in range(j):
        num *= 1 - q ** (k - i)
        den *= 1 - q ** (i + 1)
    return Fraction(num, den)


@pytest.mark.parametrize("q", [2, 3, -2, Fraction(1, 2)])
def test_gaussian_binomial_product_formula(q):
    for k in range(8):
        for j in range(k + 1):
            assert gaussian_binomial(k, j, Fraction(q)) == _q_binomial_product(k, j, Fraction(q))


def test_gaussian_binomial_vanishes_at_roots_of_unity():
    for n in range(2, 9):
        w = omega(n)
        assert all(gaussian_binomial(n, j, w) == 0 for j in range(1, n))
        assert gaussian_binomial(n, 0, w) == 1 == gaussian_binomial(n, n, w)


@pytest.mark.parametrize("n", range(2, 9))
def test_delta_x_power_oracle(n):
    T = taft(n) if n in TAFT_NS else build_taft(n, verify=False)
    H = T.hopf
    dx = H.coproduct_sparse(T.x)
    acc = H.coproduct_sparse(T.one())
    for k in range(n):
        expected = delta_x_power(T, k)
        assert dense(T.field, T.dim, acc) == expected
        assert H.coproduct(T.power(T.x, k)) == expected
        acc = sparse_tensor_product(H.algebra, acc, dx)


def test_delta_x_examples():
    T = taft(3)
    assert delta_x_power(T, 0) == tensor(T.one(), T.one())
    assert delta_x_power(T, 1) == tensor(T.x, T.one()) + tensor(T.g, T.x)
    with pytest.raises(ValueError):
        delta_x_power(T, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_delta_p_beta_printed_form(n):
    # Delta(P_b) = (1/n) sum_k S((g+bx)^k) g^{-1} (x) (g+bx)^{n-k-1}, first leg on the left
    T = taft(n)
    H = T.hopf
    ginv = T.elem(n - 1)
    for b in betas(T):
        ys = y_powers(T, b)
        printed = tensor(T.one(), T.one()) * 0
        flipped = printed
        for k in range(n):
            left = T.mul(H.S(ys[k]), ginv)
            printed = printed + tensor(left, ys[n - k - 1])
            flipped = flipped + tensor(ys[n - k - 1], left)
        c = T.field(1) / n
        assert H.coproduct(p_beta(T, b)) == printed * c
        assert H.coproduct(p_beta(T, b)) != flipped * c


def test_p_beta_examples():
    T = taft(2)
    P = p_beta(T, 1)
    assert P == T.scale(Fraction(1, 2), T.add(T.one(), T.g, T.x))
    assert T.mul(P, P) == P
    with pytest.raises(ValueError):
        p_beta(T, 0)
    for n in TAFT_NS:
        T = taft(n)
        for b in betas(T):
            y = T.add(T.g, T.scale(b, T.x))
            assert T.power(y, n) == T.one()
            P = p_beta(T, b)
            assert T.mul(P, P) == P


def test_h_d_examples():
    for n in TAFT_NS:
        T = taft(n)
        assert hopf_sub_h_d(T, n).space == Subspace(T.dim, [T.one()], T.field)
        assert p_d(T, n) == T.one()
        assert p_d(T, 1) == T.scale(Fraction(1, n), T.combo({(k, 0): 1 for k in range(n)}))
        for d in divisors(n):
            P = p_d(T, d)
            expected = sum((tensor(T.elem(d * k), T.elem(d * k)) for k in range(1, n // d)),
                           tensor(T.one(), T.one())) * T.field(Fraction(d, n))
            assert T.hopf.coproduct(P) == expected
            assert hopf_sub_h_d(T, d).dim == n // d
    with pytest.raises(ValueError):
        hopf_sub_h_d(taft(4), 3)


def test_n_dx_examples():
    for n in TAFT_NS:
        T = taft(n)
        for d in divisors(n):
            assert coideal_n_dx(T, d).dim == n * n // d
        assert coideal_n_dx(T, n).space == Subspace(T.dim, [T.elem(0, l) for l in range(n)],
                                                      T.field)
        assert lambda_dx(T, n) == T.elem(0, n - 1)
    with pytest.raises(ValueError):
        coideal_n_dx(taft(6), 4)
    with pytest.raises(ValueError):
        lambda_dx(taft(6), 5)


@pytest.mark.parametrize("n", TAFT_NS)
def test_family_flags_and_semisimplicity(n):
    T = taft(n)
    for name, A, _ in families(T):
        assert A.is_coideal_subalgebra, name
        expected = not name.startswith("N_")
        assert alg.is_semisimple(A.algebra) == expected, name
    assert not alg.is_semisimple(T.hopf.algebra)


@pytest.mark.parametrize("n", TAFT_NS)
def test_cointegral_tables(n):
    T = taft(n)
    rows = cointegral_tables(T, betas=betas(T))
    assert all(r["ok"] for r in rows), [r for r in rows if not r["ok"]]
    # dimension pattern
    for r in rows:
        j = r["g_exponent"]
        fam = r["family"]
        if fam.startswith("V_P"):
            assert r["dim"] == (j % n == n - 1)
        elif fam.startswith("H_"):
            assert r["dim"] == (j % int(fam[2:]) == 0)
        else:
            d = int(fam[2:].split(",")[0])
            assert r["dim"] == ((j + 1) % d == 0)


def test_v_p_beta_rank_check():
    T = taft(3)
    assert coideal_v_p_beta(T, T.omega).dim == 3
    assert Subspace(9, y_powers(T, 2), T.field).dim == 3
