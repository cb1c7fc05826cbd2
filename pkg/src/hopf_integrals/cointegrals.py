"""g-cointegrals on left coideals, z_y and Ad_P."""

from __future__ import annotations

from typing import Sequence

from . import algebra as alg
from .hopf import (
    GroupLike,
    HopfAlgebra,
    is_left_coideal,
    smallest_left_coideal,
    smallest_right_coideal,
    tensor,
    tensor_mul_left,
)
from .integrals import CoidealSubalgebra, induced_subalgebra, is_integral_type
from .linalg import Matrix, Subspace, dot, kernel_of_rows, solve

__all__ = [
    "Cointegral",
    "HypothesisError",
    "g_cointegrals",
    "normalize_on",
    "check_two_sided_identity",
    "two_sided_identity_holds",
    "iota",
    "z_element",
    "ad_p",
    "is_invertible_in",
    "is_faithful_on",
    "cointegral_report",
]


class HypothesisError(ValueError):
    """Raised when an input violates the hypothesis an operation relies on."""


def _cointegral_rows(H: HopfAlgebra, V: Subspace, g: Sequence):
    # unknowns: f_s = phi(b_s); for each basis b_r and each ambient index i:
    #   sum_s Delta(b_r)[i, p_s] f_s - g_i f_r = 0
    for r, b in enumerate(V.basis):
        t = H.coproduct(b)
        for i in range(H.dim):
            row = [t[i, p] for p in V.pivots]
            if not g[i].is_zero():
                row[r] = row[r] - g[i]
            if any(not c.is_zero() for c in row):
                yield tuple(row)


def g_cointegrals(H: HopfAlgebra, V: Subspace, g: Sequence) -> Subspace:
    """Space of g-cointegrals on V, in coordinates relative to V's echelon basis."""
    if not is_left_coideal(H, V):
        raise ValueError("V is not a left coideal")
    g = GroupLike(H, g) if not isinstance(g, GroupLike) else g
    if not V.dim:
        return Subspace(0, [], H.field)
    return kernel_of_rows(_cointegral_rows(H, V, g.vector), V.dim, H.field)


class Cointegral:
    """phi on V with (id (x) phi) Delta(a) = phi(a) g, verified at construction."""

    def __init__(self, H: HopfAlgebra, space: Subspace, g: Sequence, phi: Sequence):
        self.H = H
        self.space = space
        self.g = g if isinstance(g, GroupLike) else GroupLike(H, g)
        self.phi = tuple(phi)
        if len(self.phi) != space.dim:
            raise ValueError("phi needs one value per basis vector of V")
        for b in space.basis:
            # (id (x) phi) Delta(b): the rows of Delta(b) are its second legs
            lhs = tuple(self(r) for r in H.coproduct(b).rows)
            rhs = tuple(self(b) * x for x in self.g.vector)
            if lhs != rhs:
                raise ValueError("functional is not a g-cointegral on V")

    def __call__(self, v: Sequence):
        """phi(v) for v in V (extended by zero on the echelon complement)."""
        return dot(self.ambient(), v)

    def ambient(self) -> tuple:
        return self.space.extend_functional(self.phi)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.phi)

    def scaled(self, c) -> Cointegral:
        return Cointegral(self.H, self.space, self.g, tuple(c * x for x in self.phi))

    def __repr__(self):
        return f"Cointegral(g={self.g!r}, dim V={self.space.dim})"


def normalize_on(phi: Cointegral, lam: Sequence) -> Cointegral:
    """Rescale phi so that phi(lam) = 1, i.e. U(phi) = g."""
    if phi.is_zero():
        raise ValueError("cannot normalize the zero cointegral")
    val = phi(lam)
    if val.is_zero():
        raise ArithmeticError("non-zero cointegral vanishes on lambda")
    return phi.scaled(val.inverse())


def is_faithful_on(phi: Cointegral) -> bool | None:
    """Gram test on V's own multiplication; None when V is not a unital subalgebra."""
    H = phi.H
    V = phi.space
    if not alg.is_closed(H.algebra, V) or H.one() not in V:
        return None
    return alg.is_faithful_functional(alg.restrict(H.algebra, V), phi.phi)


# -- the two-sidedness identity -------------------------------------------------

def two_sided_identity_holds(H: HopfAlgebra, lam: Sequence, g: Sequence) -> bool:
    """(1 (x) lam) Delta(lam) == S(lam) g (x) lam."""
    lam = tuple(lam)
    lhs = tensor_mul_left(H, None, lam, H.coproduct(lam))
    rhs = tensor(H.multiply(H.S(lam), tuple(g)), lam)
    return lhs == rhs


def check_two_sided_identity(H: HopfAlgebra, lam: Sequence, g: Sequence,
                             phi: Cointegral) -> bool:
    """Evaluate the identity after checking its hypotheses.

    lam must be of integral type and phi a faithful non-zero g-cointegral on
    A_lam; otherwise :class:`HypothesisError` is raised.
    """
    lam = tuple(lam)
    if not is_integral_type(H, lam):
        raise HypothesisError("lambda is not of integral type")
    A = induced_subalgebra(H, lam).subalgebra.space
    if phi.space != A:
        raise HypothesisError("cointegral does not live on A_lambda")
    if tuple(phi.g.vector) != tuple(g):
        raise HypothesisError("cointegral is attached to a different group-like")
    if phi.is_zero() or not is_faithful_on(phi):
        raise HypothesisError("cointegral is not faithful")
    return two_sided_identity_holds(H, lam, g)


# -- z_y and Ad_P ---------------------------------------------------------------

def _s_times_y_matrix(H: HopfAlgebra, VP: Subspace, y: Sequence) -> Matrix:
    """Columns S(b_r) y for the echelon basis b_r of V_P."""
    cols = [H.multiply(H.S(b), tuple(y)) for b in VP.basis]
    return Matrix(zip(*cols), len(cols), H.field)


def iota(H: HopfAlgebra, P: Sequence, y: Sequence, u: Sequence) -> tuple:
    """The a in V_P with S(a) y = u."""
    VP = smallest_left_coideal(H, P)
    PV = smallest_right_coideal(H, P)
    _check_cyclic_separating(H, VP, PV, y)
    M = _s_times_y_matrix(H, VP, y)
    coeffs = solve(M, tuple(u))
    if coeffs is None:
        raise ValueError("u is not of the form S(a) y with a in V_P")
    return VP.from_coordinates(coeffs)


def _check_cyclic_separating(H, VP, PV, y):
    y = tuple(y)
    if all(c.is_zero() for c in y):
        raise ValueError("y must be non-zero")
    if y not in PV:
        raise ValueError("y is not in the right coideal of P")
    if VP.dim != PV.dim:
        raise ArithmeticError("coideal dimensions differ")
    images = Subspace(H.dim, (H.multiply(H.S(b), y) for b in VP.basis), H.field)
    if images != PV:
        raise ValueError("y is not cyclic and separating")


def z_element(H: HopfAlgebra, P: Sequence, y: Sequence) -> tuple:
    """z_y = P_(2) iota_y(P_(1))."""
    P = tuple(P)
    VP = smallest_left_coideal(H, P)
    PV = smallest_right_coideal(H, P)
    _check_cyclic_separating(H, VP, PV, y)
    M = _s_times_y_matrix(H, VP, y)
    t = H.coproduct(P)
    K = H.field
    z = [K.zero] * H.dim
    # Delta(P) = sum_j (column j) (x) e_j; columns lie in _P V
    for j in range(H.dim):
        col = t.column(j)
        if all(c.is_zero() for c in col):
            continue
        coeffs = solve(M, col)
        a = VP.from_coordinates(coeffs)
        term = H.multiply(H.basis_vector(j), a)
        z = [x + w for x, w in zip(z, term)]
    return tuple(z)


def ad_p(H: HopfAlgebra, P: Sequence, a: Sequence) -> tuple:
    """Ad_P(a) = P_(2) a S^{-1}(P_(1))."""
    K = H.field
    out = [K.zero] * H.dim
    for (i, j), c in H.coproduct_sparse(tuple(P)).items():
        term = H.algebra.product(H.basis_vector(j), tuple(a), H.S_inv(H.basis_vector(i)))
        out = [x + c * w for x, w in zip(out, term)]
    return tuple(out)


def is_invertible_in(A: CoidealSubalgebra | Subspace, z: Sequence, H: HopfAlgebra | None = None):
    """Inverse of z inside A (checked on both sides), or None."""
    if isinstance(A, CoidealSubalgebra):
        H, space = A.ambient, A.space
    else:
        space = A
        if H is None:
            raise ValueError("ambient Hopf algebra required")
    z = tuple(z)
    if z not in space:
        raise ValueError("z is not in A")
    cols = [H.multiply(z, b) for b in space.basis]
    M = Matrix(zip(*cols), len(cols), H.field)
    coeffs = solve(M, H.one())
    if coeffs is None:
        return None
    w = space.from_coordinates(coeffs)
    if H.multiply(w, z) != H.one():
        raise ArithmeticError("one-sided inverse is not two-sided")
    return w


def cointegral_report(H: HopfAlgebra, V: Subspace, g: GroupLike, lam: Sequence | None = None,
                      family: str | None = None, labels: Sequence[str] | None = None) -> dict:
    from .serialize import scalar_str
    sol = g_cointegrals(H, V, g)
    out = {
        "family": family,
        "g_exponent": g.exponent,
        "dim": sol.dim,
        "phi_values": {},
        "faithful": None,
    }
    if sol.dim == 1:
        phi = Cointegral(H, V, g, sol.basis[0])
        if lam is not None:
            phi = normalize_on(phi, lam)
        names = labels or [f"b{r}" for r in range(V.dim)]
        out["phi_values"] = {names[r]: scalar_str(c) for r, c in enumerate(phi.phi)}
        out["faithful"] = is_faithful_on(phi)
    return out
