"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    dot,
    kernel_of_rows,
    rank,
    unit_vector,
    zero_vector,
)
from .scalars import CyclotomicField

__all__ = [
    "FinDimAlgebra",
    "NotAnIdeal",
    "NonUnitalError",
    "left_annihilator",
    "right_annihilator",
    "check_biannihilator",
    "is_left_ideal",
    "is_right_ideal",
    "is_semisimple",
    "trace_form",
    "gram",
    "is_faithful_functional",
    "frobenius_search",
    "is_multiplicative",
    "functional_kernel",
    "left_integrals",
    "right_integrals",
    "restrict",
]


class NotAnIdeal(ValueError):
    pass


class NonUnitalError(ValueError):
    pass


class FinDimAlgebra:
    """Associative algebra on K^dim with sparse structure constants.

    ``mult`` maps a pair of basis indices (i, j) to the product e_i e_j given
    as a list of (k, coefficient) pairs.  Missing pairs multiply to zero.
    """

    def __init__(self, field: CyclotomicField, dim: int,
                 mult: dict[tuple[int, int], list] | Iterable[tuple],
                 unit: Sequence | None = None, labels: Sequence[str] | None = None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.field = field
        self.dim = dim
        table = [[() for _ in range(dim)] for _ in range(dim)]
        if isinstance(mult, dict):
            items = ((i, j, k, c) for (i, j), terms in mult.items() for k, c in terms)
        else:
            items = mult
        acc: dict[tuple[int, int], dict[int, object]] = {}
        for i, j, k, c in items:
            c = field(c)
            if c.is_zero():
                continue
            d = acc.setdefault((i, j), {})
            d[k] = d[k] + c if k in d else c
        for (i, j), d in acc.items():
            table[i][j] = tuple(sorted((k, c) for k, c in d.items() if not c.is_zero()))
        self.table = table
        self.unit = None if unit is None else tuple(field(c) for c in unit)
        if self.unit is not None and len(self.unit) != dim:
            raise ShapeError("unit vector has the wrong length")
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(dim)]

    # -- basic arithmetic ---------------------------------------------------

    def zero(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def multiply(self, a: Sequence, b: Sequence) -> tuple:
        if len(a) != self.dim or len(b) != self.dim:
            raise ShapeError("operands must have length dim")
        acc = [None] * self.dim
        nzb = [(j, y) for j, y in enumerate(b) if not y._zero]
        for i, x in enumerate(a):
            if x._zero:
                continue
            row = self.table[i]
            for j, y in nzb:
                terms = row[j]
                if not terms:
                    continue
                xy = x * y
                for k, c in terms:
                    t = xy * c
                    acc[k] = t if acc[k] is None else acc[k] + t
        z = self.field.zero
        return tuple(z if v is None else v for v in acc)

    def product(self, *factors: Sequence) -> tuple:
        out = factors[0]
        for f in factors[1:]:
            out = self.multiply(out, f)
        return out

    def power(self, a: Sequence, k: int) -> tuple:
        if k == 0:
            return self.one()
        out = a
        for _ in range(k - 1):
            out = self.multiply(out, a)
        return out

    def one(self) -> tuple:
        if self.unit is None:
            raise NonUnitalError("algebra has no unit")
        return self.unit

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def left_mult_matrix(self, a: Sequence) -> Matrix:
        """Matrix of v -> a v acting on column vectors."""
        cols = [self.multiply(a, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(zip(*cols), self.dim, self.field)

    def right_mult_matrix(self, a: Sequence) -> Matrix:
        """Matrix of v -> v a acting on column vectors."""
        cols = [self.multiply(self.basis_vector(j), a) for j in range(self.dim)]
        return Matrix(zip(*cols), self.dim, self.field)

    # -- structural checks --------------------------------------------------

    def associativity_failures(self) -> list[tuple[int, int, int]]:
        bad = []
        e = [self.basis_vector(i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                eij = self.multiply(e[i], e[j])
                for k in range(self.dim):
                    if self.multiply(eij, e[k]) != self.multiply(e[i], self.multiply(e[j], e[k])):
                        bad.append((i, j, k))
        return bad

    def unit_failures(self) -> list[int]:
        if self.unit is None:
            return []
        bad = []
        for i in range(self.dim):
            e = self.basis_vector(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                bad.append(i)
        return bad

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, conductor={self.field.n})"


# -- subalgebras -----------------------------------------------------------

def is_closed(A: FinDimAlgebra, space: Subspace) -> bool:
    return all(A.multiply(a, b) in space for a in space.basis for b in space.basis)


def restrict(A: FinDimAlgebra, space: Subspace, labels=None) -> FinDimAlgebra:
    """The subalgebra `space` as an algebra in its echelon-basis coordinates."""
    if not is_closed(A, space):
        raise ValueError("subspace is not closed under multiplication")
    items = []
    for r, a in enumerate(space.basis):
        for s, b in enumerate(space.basis):
            coords = space.coordinates(A.multiply(a, b))
            items.extend((r, s, t, c) for t, c in enumerate(coords) if not c.is_zero())
    unit = None
    if A.unit is not None and A.unit in space:
        unit = space.coordinates(A.unit)
    return FinDimAlgebra(A.field, space.dim, items, unit, labels)


# -- ideals and annihilators -----------------------------------------------

def _mult_rows(A: FinDimAlgebra, elems, left: bool):
    """Rows of the stacked maps a -> b a (left=True) or a -> a b."""
    for b in elems:
        m = A.left_mult_matrix(b) if left else A.right_mult_matrix(b)
        yield from m.rows


def right_annihilator(A: FinDimAlgebra, I: Subspace) -> Subspace:
    """r(I) = {a : b a = 0 for all b in I}."""
    if not I.dim:
        return Subspace.full(A.field, A.dim)
    return kernel_of_rows(_mult_rows(A, I.basis, left=True), A.dim, A.field)


def left_annihilator(A: FinDimAlgebra, I: Subspace) -> Subspace:
    """l(I) = {a : a b = 0 for all b in I}."""
    if not I.dim:
        return Subspace.full(A.field, A.dim)
    return kernel_of_rows(_mult_rows(A, I.basis, left=False), A.dim, A.field)


def is_left_ideal(A: FinDimAlgebra, I: Subspace) -> bool:
    return all(A.multiply(A.basis_vector(i), b) in I for i in range(A.dim) for b in I.basis)


def is_right_ideal(A: FinDimAlgebra, I: Subspace) -> bool:
    return all(A.multiply(b, A.basis_vector(i)) in I for i in range(A.dim) for b in I.basis)


def check_biannihilator(A: FinDimAlgebra, I: Subspace, side: str = "left") -> bool:
    """l(r(I)) == I for a left ideal, r(l(I)) == I for a right ideal."""
    if side == "left":
        if not is_left_ideal(A, I):
            raise NotAnIdeal("subspace is not a left ideal")
        return left_annihilator(A, right_annihilator(A, I)) == I
    if side == "right":
        if not is_right_ideal(A, I):
            raise NotAnIdeal("subspace is not a right ideal")
        return right_annihilator(A, left_annihilator(A, I)) == I
    raise ValueError("side must be 'left' or 'right'")


# -- semisimplicity --------------------------------------------------------

def trace_form(A: FinDimAlgebra) -> Matrix:
    """T(e_i, e_j) = trace of left multiplication by e_i e_j."""
    K = A.field
    tr = []
    for k in range(A.dim):
        t = K.zero
        for j in range(A.dim):
            for kk, c in A.table[k][j]:
                if kk == j:
                    t = t + c
        tr.append(t)
    rows = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            v = K.zero
            for k, c in A.table[i][j]:
                if not tr[k].is_zero():
                    v = v + c * tr[k]
            row.append(v)
        rows.append(tuple(row))
    return Matrix(rows, A.dim, K)


def is_semisimple(A: FinDimAlgebra) -> bool:
    """Trace-form criterion; valid in characteristic zero."""
    if not A.is_unital:
        raise NonUnitalError("semisimplicity test needs a unital algebra")
    return rank(trace_form(A)) == A.dim


# -- functionals -----------------------------------------------------------

def evaluate(functional: Sequence, v: Sequence):
    return dot(functional, v)


def gram(A: FinDimAlgebra, w: Sequence) -> Matrix:
    """gram[i][j] = w(e_i e_j)."""
    K = A.field
    rows = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            v = K.zero
            for k, c in A.table[i][j]:
                if not w[k].is_zero():
                    v = v + c * w[k]
            row.append(v)
        rows.append(tuple(row))
    return Matrix(rows, A.dim, K)


def is_faithful_functional(A: FinDimAlgebra, w: Sequence) -> bool:
    g = gram(A, w)
    # w(a b) = 0 for all b forces a = 0  <=> rows of gram independent;
    # w(b a) = 0 for all b forces a = 0  <=> columns independent.
    left = rank(g) == A.dim
    right = rank(g.transpose()) == A.dim
    if left != right:
        raise ArithmeticError("left and right faithfulness disagree")
    return left


def frobenius_search(A: FinDimAlgebra, trials: int = 50, rng_seed: int | None = 0):
    """Look for a faithful functional with small integer coordinates.

    Returns the functional (an exact certificate that A is Frobenius) or None.
    None means no certificate was found, not that A fails to be Frobenius.
    """
    if not A.is_unital:
        raise NonUnitalError("only unital algebras can carry a faithful functional")
    rng = random.Random(rng_seed)
    K = A.field
    for t in range(trials):
        bound = 1 + t // 3
        w = tuple(K(rng.randint(-bound, bound)) for _ in range(A.dim))
        if any(not c.is_zero() for c in w) and is_faithful_functional(A, w):
            return w
    return None


def is_multiplicative(A: FinDimAlgebra, mu: Sequence) -> bool:
    if not A.is_unital:
        raise NonUnitalError("multiplicativity is tested on unital algebras")
    if len(mu) != A.dim:
        raise ShapeError("functional has the wrong length")
    if evaluate(mu, A.unit) != 1:
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.field.zero
            for k, c in A.table[i][j]:
                lhs = lhs + c * mu[k]
            if lhs != mu[i] * mu[j]:
                return False
    return True


def functional_kernel(A: FinDimAlgebra, mu: Sequence) -> Subspace:
    return kernel_of_rows([tuple(mu)], A.dim, A.field)


def _integral_rows(A: FinDimAlgebra, mu: Sequence, left: bool):
    K = A.field
    for s in range(A.dim):
        m = A.left_mult_matrix(A.basis_vector(s)) if left else \
            A.right_mult_matrix(A.basis_vector(s))
        for r, row in enumerate(m.rows):
            if mu[s].is_zero():
                yield row
            else:
                yield tuple(c - mu[s] if k == r else c for k, c in enumerate(row))


def left_integrals(A: FinDimAlgebra, mu: Sequence) -> Subspace:
    """L_mu = {L : a L = mu(a) L for all a}, in A's own coordinates."""
    if not is_multiplicative(A, mu):
        raise ValueError("mu is not a multiplicative functional")
    return kernel_of_rows(_integral_rows(A, mu, left=True), A.dim, A.field)


def right_integrals(A: FinDimAlgebra, mu: Sequence) -> Subspace:
    """R_mu = {L : L a = mu(a) L for all a}, in A's own coordinates."""
    if not is_multiplicative(A, mu):
        raise ValueError("mu is not a multiplicative functional")
    return kernel_of_rows(_integral_rows(A, mu, left=False), A.dim, A.field)
