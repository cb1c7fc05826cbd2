"""Hopf algebra structure on top of :class:`FinDimAlgebra`.

Comultiplication is stored sparsely: ``delta[i]`` maps (j, k) to the
coefficient of e_j (x) e_k in Delta(e_i).  Dense tensors returned to callers
are :class:`Matrix` objects with the first leg as row index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import FinDimAlgebra
from .linalg import (
    Matrix,
    ShapeError,
    Subspace,
    col_space,
    dot,
    invert,
    matmul,
    matvec,
    row_space,
    solve,
    vecmat,
)
from .scalars import CyclotomicField

__all__ = [
    "HopfAlgebra",
    "GroupLike",
    "Check",
    "HopfReport",
    "verify_hopf_axioms",
    "smallest_left_coideal",
    "smallest_right_coideal",
    "is_left_coideal",
    "u_map",
    "act_left",
    "act_right",
    "convolve",
    "enumerate_group_likes_in_family",
    "build_group_algebra",
    "derive_antipode",
    "extend_coproduct",
    "tensor",
    "tensor_mul_left",
    "tensor_mul_right",
    "satisfies_unit_identity",
]


def _acc(d: dict, key, val):
    if val.is_zero():
        return
    if key in d:
        s = d[key] + val
        if s.is_zero():
            del d[key]
        else:
            d[key] = s
    else:
        d[key] = val


def sparse_tensor_product(A: FinDimAlgebra, s: dict, t: dict) -> dict:
    """Product in A (x) A of two sparse tensors."""
    out: dict = {}
    table = A.table
    for (i, j), a in s.items():
        for (k, l), b in t.items():
            left = table[i][k]
            if not left:
                continue
            right = table[j][l]
            if not right:
                continue
            ab = a * b
            for p, c in left:
                abc = ab * c
                for q, d in right:
                    _acc(out, (p, q), abc * d)
    return out


def extend_coproduct(A: FinDimAlgebra, generator_delta: dict[str, dict],
                     words: Sequence[Sequence[str]]) -> list[dict]:
    """Delta on each basis element from its expression as a word in generators."""
    K = A.field
    unit_index = _unit_index(A)
    one_tensor = {(unit_index, unit_index): K.one}
    out = []
    for word in words:
        t = one_tensor
        for letter in word:
            t = sparse_tensor_product(A, t, generator_delta[letter])
        out.append(t)
    return out


def _unit_index(A: FinDimAlgebra) -> int:
    nz = [i for i, c in enumerate(A.one()) if not c.is_zero()]
    if len(nz) != 1 or not A.one()[nz[0]].is_one():
        raise ValueError("word-based constructions need the unit to be a basis vector")
    return nz[0]


def derive_antipode(A: FinDimAlgebra, delta: list[dict], counit: Sequence,
                    generators: Sequence[tuple[str, int]],
                    words: Sequence[Sequence[str]]) -> Matrix:
    """Solve m(S (x) id)Delta = eta eps on generators, extend anti-multiplicatively.

    ``generators`` lists (name, basis index) in an order where each coproduct
    only involves first legs that are the generator itself, the unit, or
    generators solved earlier.  The returned matrix acts on column vectors.
    """
    K = A.field
    unit_index = _unit_index(A)
    known: dict[int, tuple] = {unit_index: A.one()}
    by_name: dict[str, tuple] = {}
    for name, idx in generators:
        w = [K.zero] * A.dim
        rhs = [counit[idx] * c for c in A.one()]
        for (j, k), c in delta[idx].items():
            if j == idx:
                w[k] = w[k] + c
            elif j in known:
                term = A.multiply(known[j], A.basis_vector(k))
                rhs = [r - c * t for r, t in zip(rhs, term)]
            else:
                raise ValueError(f"antipode of e{j} needed before it is known")
        R = A.right_mult_matrix(tuple(w))
        s = solve(R, rhs)
        if s is None:
            raise ArithmeticError(f"antipode equation for {name} has no solution")
        known[idx] = s
        by_name[name] = s
    cols = []
    for word in words:
        v = A.one()
        for letter in word:
            v = A.multiply(by_name[letter], v)
        cols.append(v)
    return Matrix(zip(*cols), A.dim, K)


class HopfAlgebra:
    """Finite-dimensional Hopf algebra with invertible antipode.

    ``antipode`` is the matrix of S acting on column vectors, so its j-th
    column is S(e_j).
    """

    def __init__(self, algebra: FinDimAlgebra, delta: Sequence[dict], counit: Sequence,
                 antipode: Matrix, antipode_inv: Matrix | None = None,
                 family: str | None = None, params: dict | None = None,
                 generators: dict[str, tuple] | None = None):
        if len(delta) != algebra.dim:
            raise ShapeError("need one coproduct per basis vector")
        if antipode.shape != (algebra.dim, algebra.dim):
            raise ShapeError("antipode must be dim x dim")
        self.algebra = algebra
        K = algebra.field
        self.delta = [{k: K(v) for k, v in d.items() if not K(v).is_zero()} for d in delta]
        self.counit = tuple(K(c) for c in counit)
        self.antipode = antipode
        if antipode_inv is None:
            antipode_inv = invert(antipode)
        self.antipode_inv = antipode_inv
        self.family = family
        self.params = dict(params or {})
        self.generators = dict(generators or {})

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> CyclotomicField:
        return self.algebra.field

    @property
    def labels(self):
        return self.algebra.labels

    def one(self) -> tuple:
        return self.algebra.one()

    def basis_vector(self, i: int) -> tuple:
        return self.algebra.basis_vector(i)

    def multiply(self, a, b) -> tuple:
        return self.algebra.multiply(a, b)

    def eps(self, v) -> object:
        return dot(self.counit, v)

    def S(self, v) -> tuple:
        return matvec(self.antipode, v)

    def S_inv(self, v) -> tuple:
        return matvec(self.antipode_inv, v)

    def coproduct_sparse(self, v: Sequence) -> dict:
        out: dict = {}
        for i, c in enumerate(v):
            if c.is_zero():
                continue
            for key, d in self.delta[i].items():
                _acc(out, key, c * d)
        return out

    def coproduct(self, v: Sequence) -> Matrix:
        if len(v) != self.dim:
            raise ShapeError("vector has the wrong length")
        return dense(self.field, self.dim, self.coproduct_sparse(v))

    def __repr__(self):
        fam = f", family={self.family}{self.params}" if self.family else ""
        return f"HopfAlgebra(dim={self.dim}{fam})"


def dense(K: CyclotomicField, dim: int, sparse: dict) -> Matrix:
    rows = [[K.zero] * dim for _ in range(dim)]
    for (j, k), c in sparse.items():
        rows[j][k] = c
    return Matrix(rows, dim, K)


def tensor(a: Sequence, b: Sequence) -> Matrix:
    """a (x) b."""
    K = CyclotomicField(a[0].conductor)
    return Matrix([tuple(x * y for y in b) for x in a], len(b), K)


def tensor_mul_left(H: HopfAlgebra, x, y, t: Matrix) -> Matrix:
    """(x (x) y) t; a None factor stands for the unit."""
    if x is not None:
        t = matmul(H.algebra.left_mult_matrix(x), t)
    if y is not None:
        t = matmul(t, H.algebra.left_mult_matrix(y).transpose())
    return t


def tensor_mul_right(H: HopfAlgebra, t: Matrix, x, y) -> Matrix:
    """t (x (x) y); a None factor stands for the unit."""
    if x is not None:
        t = matmul(H.algebra.right_mult_matrix(x), t)
    if y is not None:
        t = matmul(t, H.algebra.right_mult_matrix(y).transpose())
    return t


# -- axioms ----------------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    failures: list = field(default_factory=list)


@dataclass
class HopfReport:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "failures": [list(f) if isinstance(f, tuple) else f
                                                          for f in c.failures[:10]]}
                for c in self.checks
            ],
        }


def _sparse_vec(v) -> dict:
    return {i: c for i, c in enumerate(v) if not c.is_zero()}


def verify_hopf_axioms(H: HopfAlgebra) -> HopfReport:
    """Evaluate every Hopf algebra axiom exactly on basis vectors."""
    A = H.algebra
    K = H.field
    n = H.dim
    checks = [Check("associativity", False, A.associativity_failures())]
    if A.unit is None:
        checks.append(Check("unit", False, ["no unit"]))
        return HopfReport(checks)
    checks.append(Check("unit", False, A.unit_failures()))

    # coassociativity
    bad = []
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in H.delta[i].items():
            for (a, b), d in H.delta[j].items():
                _acc(left, (a, b, k), c * d)
            for (a, b), d in H.delta[k].items():
                _acc(right, (j, a, b), c * d)
        if left != right:
            bad.append(i)
    checks.append(Check("coassociativity", False, bad))

    # counit laws
    bad = []
    for i in range(n):
        e = _sparse_vec(H.basis_vector(i))
        l: dict = {}
        r: dict = {}
        for (j, k), c in H.delta[i].items():
            _acc(l, k, H.counit[j] * c)
            _acc(r, j, H.counit[k] * c)
        if l != e or r != e:
            bad.append(i)
    checks.append(Check("counit", False, bad))

    # Delta and eps are algebra maps
    unit = H.one()
    bad_delta, bad_eps = [], []
    for i in range(n):
        for j in range(n):
            prod = A.multiply(H.basis_vector(i), H.basis_vector(j))
            if H.coproduct_sparse(prod) != sparse_tensor_product(A, H.delta[i], H.delta[j]):
                bad_delta.append((i, j))
            if H.eps(prod) != H.counit[i] * H.counit[j]:
                bad_eps.append((i, j))
    one_one = {(a, b): x * y for a, x in _sparse_vec(unit).items()
               for b, y in _sparse_vec(unit).items()}
    if H.coproduct_sparse(unit) != one_one:
        bad_delta.append("unit")
    if H.eps(unit) != 1:
        bad_eps.append("unit")
    checks.append(Check("delta_multiplicative", False, bad_delta))
    checks.append(Check("counit_multiplicative", False, bad_eps))

    # antipode laws
    S_cols = [H.antipode.column(j) for j in range(n)]
    bad_l, bad_r = [], []
    for i in range(n):
        target = tuple(H.counit[i] * u for u in unit)
        lsum = [K.zero] * n
        rsum = [K.zero] * n
        for (j, k), c in H.delta[i].items():
            lt = A.multiply(S_cols[j], H.basis_vector(k))
            rt = A.multiply(H.basis_vector(j), S_cols[k])
            lsum = [a + c * b for a, b in zip(lsum, lt)]
            rsum = [a + c * b for a, b in zip(rsum, rt)]
        if tuple(lsum) != target:
            bad_l.append(i)
        if tuple(rsum) != target:
            bad_r.append(i)
    checks.append(Check("antipode_left", False, bad_l))
    checks.append(Check("antipode_right", False, bad_r))

    ident = [[K.one if a == b else K.zero for b in range(n)] for a in range(n)]
    ok_inv = (matmul(H.antipode, H.antipode_inv).rows == [tuple(r) for r in ident]
              and matmul(H.antipode_inv, H.antipode).rows == [tuple(r) for r in ident])
    checks.append(Check("antipode_inverse", ok_inv, [] if ok_inv else ["S S^-1 != id"]))

    for c in checks:
        if c.name != "antipode_inverse":
            c.ok = not c.failures
    return HopfReport(checks)


# -- coideals and the U map -------------------------------------------------

def smallest_left_coideal(H: HopfAlgebra, lam: Sequence) -> Subspace:
    """V_lam: span of the second legs of Delta(lam)."""
    return row_space(H.coproduct(lam))


def smallest_right_coideal(H: HopfAlgebra, lam: Sequence) -> Subspace:
    """_lam V: span of the first legs of Delta(lam)."""
    return col_space(H.coproduct(lam))


def is_left_coideal(H: HopfAlgebra, V: Subspace) -> bool:
    """Delta(V) inside H (x) V."""
    for v in V.basis:
        t = H.coproduct(v)
        if not all(r in V for r in t.rows):
            return False
    return True


def is_right_coideal(H: HopfAlgebra, V: Subspace) -> bool:
    for v in V.basis:
        t = H.coproduct(v)
        if not all(c in V for c in zip(*t.rows)):
            return False
    return True


def u_map(H: HopfAlgebra, lam: Sequence, nu: Sequence) -> tuple:
    """U(nu) = (id (x) nu)(Delta(lam)).

    ``nu`` is either a functional on V_lam given by its values on the echelon
    basis of V_lam, or an ambient functional of length dim H.
    """
    t = H.coproduct(lam)
    if len(nu) != H.dim:
        V = row_space(t)
        nu = V.extend_functional(nu)
    return matvec(t, nu)


def act_left(H: HopfAlgebra, mu: Sequence, a: Sequence) -> tuple:
    """a * mu = (mu (x) id) Delta(a)."""
    return vecmat(mu, H.coproduct(a))


def act_right(H: HopfAlgebra, a: Sequence, mu: Sequence) -> tuple:
    """mu * a = (id (x) mu) Delta(a)."""
    return matvec(H.coproduct(a), mu)


def convolve(H: HopfAlgebra, mu: Sequence, nu: Sequence) -> tuple:
    """(mu * nu)(e_i) = (mu (x) nu) Delta(e_i)."""
    K = H.field
    out = []
    for i in range(H.dim):
        v = K.zero
        for (j, k), c in H.delta[i].items():
            if not mu[j].is_zero() and not nu[k].is_zero():
                v = v + c * mu[j] * nu[k]
        out.append(v)
    return tuple(out)


def satisfies_unit_identity(H: HopfAlgebra, y: Sequence) -> bool:
    """Delta(y)(1 (x) y) == Delta(y)."""
    t = H.coproduct(y)
    return tensor_mul_right(H, t, None, y) == t


# -- group-likes -----------------------------------------------------------

class GroupLike:
    """A group-like element; Delta(g) = g (x) g and eps(g) = 1 are verified."""

    __slots__ = ("vector", "exponent")

    def __init__(self, H: HopfAlgebra, vector: Sequence, exponent: int | None = None):
        vector = tuple(vector)
        if H.eps(vector) != 1:
            raise ValueError("counit of a group-like element must be 1")
        if H.coproduct(vector) != tensor(vector, vector):
            raise ValueError("Delta(g) != g (x) g")
        self.vector = vector
        self.exponent = exponent

    def __iter__(self):
        return iter(self.vector)

    def __len__(self):
        return len(self.vector)

    def __getitem__(self, i):
        return self.vector[i]

    def __eq__(self, other):
        if isinstance(other, GroupLike):
            return self.vector == other.vector
        return tuple(other) == self.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        return f"GroupLike(g^{self.exponent})" if self.exponent is not None else "GroupLike(...)"


def enumerate_group_likes_in_family(H: HopfAlgebra) -> list[GroupLike]:
    """The powers g^k (0 <= k < n) of the declared grouplike generator."""
    if H.family not in ("taft", "group") or "g" not in H.generators:
        raise ValueError("group-like enumeration needs a Taft or cyclic group algebra")
    n = H.params["n"]
    g = H.generators["g"]
    out = []
    cur = H.one()
    for k in range(n):
        out.append(GroupLike(H, cur, k))
        cur = H.multiply(cur, g)
    return out


# -- cyclic group algebras -------------------------------------------------

def build_group_algebra(n: int, conductor: int = 1) -> HopfAlgebra:
    """Q(w_conductor)[Z/n] with basis g^0, ..., g^(n-1)."""
    if n < 1:
        raise ValueError("group order must be positive")
    K = CyclotomicField(conductor)
    mult = [(i, j, (i + j) % n, 1) for i in range(n) for j in range(n)]
    unit = [1] + [0] * (n - 1)
    labels = [f"g^{i}" for i in range(n)]
    A = FinDimAlgebra(K, n, mult, unit, labels)
    g_index = 1 % n
    gdelta = {"g": {(g_index, g_index): K.one}}
    words = [["g"] * i for i in range(n)]
    delta = extend_coproduct(A, gdelta, words)
    counit = [1] * n
    S = derive_antipode(A, delta, [K(c) for c in counit], [("g", g_index)], words)
    H = HopfAlgebra(A, delta, counit, S, family="group", params={"n": n},
                    generators={"g": A.basis_vector(g_index)})
    report = verify_hopf_axioms(H)
    if not report.ok:
        raise ArithmeticError(f"group algebra failed axioms: {report.failed()}")
    return H
