"""mu-integrals on left coideal subalgebras and the elements of integral type.

All vectors live in the ambient Hopf algebra's coordinates; a coideal
subalgebra is a :class:`Subspace` of H together with its structure flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import algebra as alg
from .hopf import (
    HopfAlgebra,
    is_left_coideal,
    smallest_left_coideal,
    tensor,
    tensor_mul_left,
    tensor_mul_right,
)
from .linalg import Matrix, Subspace, dot, kernel_of_rows, matvec, vecmat

__all__ = [
    "CoidealSubalgebra",
    "InducedData",
    "left_integrals",
    "right_integrals",
    "induced_subalgebra",
    "is_integral_type",
    "is_lambda_integral_type",
    "is_nondegenerate",
    "nondegeneracy_criteria",
    "classify_group_like_projection",
    "is_unimodular",
    "check_pi_identity",
    "pi_mu",
    "scan_integral_type",
    "integral_report",
]


class CoidealSubalgebra:
    """A subspace of H with recomputed closure flags."""

    def __init__(self, ambient: HopfAlgebra, space: Subspace | Iterable[Sequence],
                 name: str | None = None):
        if not isinstance(space, Subspace):
            space = Subspace(ambient.dim, space, ambient.field)
        if space.ambient_dim != ambient.dim:
            raise ValueError("subspace does not live in the ambient Hopf algebra")
        self.ambient = ambient
        self.space = space
        self.name = name
        self.is_subalgebra = alg.is_closed(ambient.algebra, space)
        self.is_left_coideal = is_left_coideal(ambient, space)
        self.contains_unit = ambient.one() in space

    @property
    def is_coideal_subalgebra(self) -> bool:
        return self.is_subalgebra and self.is_left_coideal and self.contains_unit

    def require(self):
        if not self.is_coideal_subalgebra:
            raise ValueError(
                f"{self.name or 'subspace'} is not a left coideal subalgebra "
                f"(subalgebra={self.is_subalgebra}, left coideal={self.is_left_coideal}, "
                f"unit={self.contains_unit})"
            )
        return self

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self):
        return self.space.basis

    @cached_property
    def algebra(self) -> alg.FinDimAlgebra:
        labels = [f"b{r}" for r in range(self.dim)]
        return alg.restrict(self.ambient.algebra, self.space, labels)

    def coords(self, v) -> tuple:
        return self.space.coordinates(v)

    def vector(self, coords) -> tuple:
        return self.space.from_coordinates(coords)

    def restrict_functional(self, mu: Sequence) -> tuple:
        """Values of mu on the echelon basis; accepts ambient or local functionals."""
        if len(mu) == self.dim:
            return tuple(mu)
        if len(mu) != self.ambient.dim:
            raise ValueError("functional length matches neither A nor H")
        return tuple(dot(mu, b) for b in self.basis)

    def counit(self) -> tuple:
        return self.restrict_functional(self.ambient.counit)

    def __contains__(self, v) -> bool:
        return v in self.space

    def __repr__(self):
        return f"CoidealSubalgebra({self.name or '?'}, dim={self.dim})"


def _lift(A: CoidealSubalgebra, local: Subspace) -> Subspace:
    H = A.ambient
    return Subspace(H.dim, (A.vector(c) for c in local.basis), H.field)


def left_integrals(A: CoidealSubalgebra, mu: Sequence) -> Subspace:
    """L^A_mu as a subspace of H."""
    A.require()
    local = alg.left_integrals(A.algebra, A.restrict_functional(mu))
    return _lift(A, local)


def right_integrals(A: CoidealSubalgebra, mu: Sequence) -> Subspace:
    """R^A_mu as a subspace of H."""
    A.require()
    local = alg.right_integrals(A.algebra, A.restrict_functional(mu))
    return _lift(A, local)


def pi_mu(A: CoidealSubalgebra, mu: Sequence, v: Sequence) -> tuple:
    """(id (x) mu) Delta(v) for v in A; mu is evaluated on the second legs."""
    vals = A.restrict_functional(mu)
    return matvec(A.ambient.coproduct(v), A.space.extend_functional(vals))


# -- the induced coideal subalgebra --------------------------------------------

@dataclass
class InducedData:
    """A_lt together with pi and mu = eps o pi.

    ``pi`` has one row per echelon basis vector of A_lt, holding pi of it.
    ``mu`` holds the values of eps o pi on that basis.
    """

    subalgebra: CoidealSubalgebra
    pi: Matrix
    mu: tuple
    lam_tilde: tuple

    def pi_of(self, a: Sequence) -> tuple:
        return vecmat(self.subalgebra.coords(a), self.pi)


def _pivot(v: Sequence) -> int:
    for i, c in enumerate(v):
        if not c.is_zero():
            return i
    raise ValueError("element must be non-zero")


def _times_lt_rows(H: HopfAlgebra, a_index: int, right_products):
    """Rows of Delta(e_a)(1 (x) lt) as sparse dict i -> row."""
    rows: dict[int, list] = {}
    for (i, j), c in H.delta[a_index].items():
        prod = right_products[j]
        row = rows.get(i)
        if row is None:
            rows[i] = [c * p for p in prod]
        else:
            rows[i] = [r + c * p for r, p in zip(row, prod)]
    return rows


def induced_subalgebra(H: HopfAlgebra, lam_tilde: Sequence) -> InducedData:
    """A_lt = {a : Delta(a)(1 (x) lt) in H (x) K lt} and pi: A_lt -> H."""
    lt = tuple(lam_tilde)
    p = _pivot(lt)
    inv = lt[p].inverse()
    K = H.field
    n = H.dim
    right_products = [H.multiply(H.basis_vector(j), lt) for j in range(n)]
    # For each basis vector e_k: residual after removing the K lt component
    # (the echelon complement of K lt) and the extracted first-leg vector.
    residuals = []
    firsts = []
    for k in range(n):
        rows = _times_lt_rows(H, k, right_products)
        res = {}
        first = [K.zero] * n
        for i, row in rows.items():
            c = row[p] * inv
            first[i] = c
            r = [x - c * y for x, y in zip(row, lt)]
            res[i] = r
        residuals.append(res)
        firsts.append(tuple(first))

    def equations():
        for i in range(n):
            for m in range(n):
                yield tuple(
                    residuals[k][i][m] if i in residuals[k] else K.zero for k in range(n)
                )

    space = kernel_of_rows(equations(), n, K)
    sub = CoidealSubalgebra(H, space, name="A_lt")
    F = Matrix(firsts, n, K)  # row k = pi(e_k)
    pi_rows = [vecmat(b, F) for b in space.basis]
    pi = Matrix(pi_rows, n, K) if pi_rows else Matrix([], n, K)
    mu = tuple(H.eps(r) for r in pi_rows)
    return InducedData(sub, pi, mu, lt)


# -- integral-type elements ---------------------------------------------------

def is_integral_type(H: HopfAlgebra, lam: Sequence) -> bool:
    """Delta(lam)(1 (x) lam) == lam (x) lam."""
    lam = tuple(lam)
    _pivot(lam)
    t = tensor_mul_right(H, H.coproduct(lam), None, lam)
    return t == tensor(lam, lam)


def is_lambda_integral_type(H: HopfAlgebra, lam_tilde: Sequence) -> tuple | None:
    """Return lam with Delta(lt)(1 (x) lt) = lam (x) lt, or None."""
    lt = tuple(lam_tilde)
    p = _pivot(lt)
    t = tensor_mul_right(H, H.coproduct(lt), None, lt)
    inv = lt[p].inverse()
    c = tuple(t[i, p] * inv for i in range(H.dim))
    if t != tensor(c, lt):
        return None
    if all(x.is_zero() for x in c):
        return None
    if not is_integral_type(H, c):
        raise ArithmeticError("first leg of a lambda-integral element is not of integral type")
    return c


def nondegeneracy_criteria(H: HopfAlgebra, lam_tilde: Sequence) -> tuple[bool, bool]:
    """(1 in V_lt, V_lt == A_lt) for an element of Lambda-integral type."""
    if is_lambda_integral_type(H, lam_tilde) is None:
        raise ValueError("element is not of Lambda-integral type")
    V = smallest_left_coideal(H, lam_tilde)
    A = induced_subalgebra(H, lam_tilde).subalgebra.space
    return H.one() in V, V == A


def is_nondegenerate(H: HopfAlgebra, lam_tilde: Sequence) -> bool:
    unit_in_v, v_is_a = nondegeneracy_criteria(H, lam_tilde)
    if unit_in_v != v_is_a:
        raise ArithmeticError("non-degeneracy criteria disagree")
    return unit_in_v


def classify_group_like_projection(H: HopfAlgebra, P: Sequence) -> str:
    """'none', 'right', 'left' or 'two_sided'."""
    P = tuple(P)
    _pivot(P)
    if H.multiply(P, P) != P:
        raise ValueError("P is not an idempotent")
    t = H.coproduct(P)
    pp = tensor(P, P)
    right = (tensor_mul_right(H, t, None, P) == pp and tensor_mul_left(H, None, P, t) == pp)
    left = (tensor_mul_right(H, t, P, None) == pp and tensor_mul_left(H, P, None, t) == pp)
    if right and left:
        return "two_sided"
    if right:
        return "right"
    if left:
        return "left"
    return "none"


def is_unimodular(A: CoidealSubalgebra) -> bool:
    eps = A.counit()
    if all(c.is_zero() for c in eps):
        raise ValueError("counit vanishes on the subalgebra")
    return left_integrals(A, eps) == right_integrals(A, eps)


def check_pi_identity(H: HopfAlgebra, lam_tilde: Sequence, data: InducedData) -> bool:
    """(1 (x) a) Delta(lt) == (S(pi(a)) (x) 1) Delta(lt) on every basis a of A_lt."""
    t = H.coproduct(lam_tilde)
    for a, pa in zip(data.subalgebra.basis, data.pi.rows):
        lhs = tensor_mul_left(H, None, a, t)
        rhs = tensor_mul_left(H, H.S(pa), None, t)
        if lhs != rhs:
            return False
    return True


def scan_integral_type(H: HopfAlgebra, candidates: Iterable[tuple[object, Sequence]]):
    """Keep the (label, vector) candidates that are of integral type."""
    return [(label, v) for label, v in candidates
            if any(not c.is_zero() for c in v) and is_integral_type(H, v)]


def integral_report(A: CoidealSubalgebra, mu: Sequence | None = None, family: str | None = None,
                    mu_label: str = "eps") -> dict:
    from .serialize import scalar_str
    H = A.ambient
    if mu is None:
        mu = H.counit
    L = left_integrals(A, mu)
    R = right_integrals(A, mu)
    report = {
        "family": family or A.name,
        "mu": mu_label,
        "dim_L": L.dim,
        "dim_R": R.dim,
        "basis_L": [[scalar_str(c) for c in b] for b in L.basis],
        "basis_R": [[scalar_str(c) for c in b] for b in R.basis],
        "nondegenerate": None,
        "projection_class": None,
    }
    if L.dim == 1:
        lam = L.basis[0]
        report["nondegenerate"] = is_nondegenerate(H, lam)
        e = H.eps(lam)
        if not e.is_zero():
            P = tuple(c / e for c in lam)
            if H.multiply(P, P) == P:
                report["projection_class"] = classify_group_like_projection(H, P)
    return report
