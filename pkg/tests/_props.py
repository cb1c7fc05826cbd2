"""Property checks shared by the hypothesis suites and the acceptance runner.

Every check takes fully explicit inputs and returns a bool, so the same code
runs under hypothesis and under a seeded ``random.Random`` sampler.
"""

from functools import lru_cache

from _util import character, families, taft
from hopf_integrals import algebra as alg
from hopf_integrals.hopf import (
    smallest_left_coideal,
    smallest_right_coideal,
    tensor_mul_left,
    u_map,
)
from hopf_integrals.integrals import (
    check_pi_identity,
    induced_subalgebra,
    left_integrals,
    right_integrals,
)
from hopf_integrals.linalg import dot, tensor_rank


@lru_cache(maxsize=None)
def family_pool(n):
    """(label, coideal subalgebra, character index) for every family and character."""
    T = taft(n)
    return [(name, A, j) for name, A, _ in families(T) for j in range(n)]


@lru_cache(maxsize=None)
def lambda_pool(n):
    """(label, lt) for every non-zero left mu-integral of a named family."""
    T = taft(n)
    out = []
    for name, A, j in family_pool(n):
        for lt in left_integrals(A, character(T, j)).basis:
            out.append((f"{name}, mu_{j}", lt))
    return out


@lru_cache(maxsize=None)
def induced(n, idx):
    return induced_subalgebra(taft(n).hopf, lambda_pool(n)[idx][1])


@lru_cache(maxsize=None)
def coideal_of(n, idx):
    return smallest_left_coideal(taft(n).hopf, lambda_pool(n)[idx][1])


@lru_cache(maxsize=None)
def integrals_of(n, fam_idx):
    T = taft(n)
    _, A, j = family_pool(n)[fam_idx]
    mu = character(T, j)
    return left_integrals(A, mu), right_integrals(A, mu)


def combo(space, coeffs):
    K = space.field
    return space.from_coordinates([K(c) for c in coeffs[: space.dim]]
                                  + [K.zero] * max(0, space.dim - len(coeffs)))


def check_coideal_rank(H, lam) -> bool:
    t = H.coproduct(lam)
    return tensor_rank(t) == smallest_left_coideal(H, lam).dim == smallest_right_coideal(H, lam).dim


def check_integrals_are_annihilators(A, mu) -> bool:
    """L_mu = r(ker mu) and R_mu = l(ker mu), in A's own coordinates."""
    B = A.algebra
    local = A.restrict_functional(mu)
    ker = alg.functional_kernel(B, local)
    return (alg.right_annihilator(B, ker) == alg.left_integrals(B, local)
            and alg.left_annihilator(B, ker) == alg.right_integrals(B, local))


def check_ideal_closure(n, fam_idx, coeffs) -> bool:
    """a L and L a stay in L (and likewise for R) for the element a given by coeffs."""
    T = taft(n)
    _, A, _ = family_pool(n)[fam_idx]
    a = combo(A.space, coeffs)
    for S in integrals_of(n, fam_idx):
        for v in S.basis:
            if T.mul(a, v) not in S or T.mul(v, a) not in S:
                return False
    return True


def check_u_module(n, idx, nu_coeffs, a_coeffs) -> bool:
    """U(nu . a) = S(pi(a)) U(nu) with (nu . a)(v) = nu(a v)."""
    T = taft(n)
    H = T.hopf
    lt = lambda_pool(n)[idx][1]
    V = coideal_of(n, idx)
    data = induced(n, idx)
    a = combo(data.subalgebra.space, a_coeffs)
    nu = [T.field(c) for c in (list(nu_coeffs) * V.dim)[: V.dim]]
    nu_amb = V.extend_functional(nu)
    nu_a = [dot(nu_amb, H.multiply(a, v)) for v in V.basis]
    return u_map(H, lt, nu_a) == H.multiply(H.S(data.pi_of(a)), u_map(H, lt, nu))


def check_pi_twist(n, idx, a_coeffs) -> bool:
    """(1 (x) a) Delta(lt) = (S(pi(a)) (x) 1) Delta(lt) for a random a, plus every basis a."""
    T = taft(n)
    H = T.hopf
    lt = lambda_pool(n)[idx][1]
    data = induced(n, idx)
    a = combo(data.subalgebra.space, a_coeffs)
    t = H.coproduct(lt)
    ok = tensor_mul_left(H, None, a, t) == tensor_mul_left(H, H.S(data.pi_of(a)), None, t)
    return ok and check_pi_identity(H, lt, data)
