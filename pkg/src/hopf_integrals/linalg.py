"""Dense exact linear algebra over a cyclotomic field.

Vectors are tuples of :class:`CycScalar`.  Matrices are row-major
(:class:`Matrix`).  Subspaces are kept in reduced row-echelon form with unit
pivots, so two subspaces are equal exactly when their bases are equal.

Tensors in H (x) H are matrices whose row index is the first leg and whose
column index is the second leg.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import CycScalar, CyclotomicField

__all__ = [
    "Matrix",
    "Subspace",
    "ShapeError",
    "rref",
    "rank",
    "kernel",
    "solve",
    "member",
    "span",
    "tensor_rank",
    "row_space",
    "col_space",
    "matmul",
    "matvec",
    "vecmat",
    "identity",
    "zero_vector",
    "unit_vector",
    "add_vectors",
    "scale",
    "dot",
    "invert",
]


class ShapeError(ValueError):
    pass


def zero_vector(K: CyclotomicField, n: int) -> tuple:
    return (K.zero,) * n


def unit_vector(K: CyclotomicField, n: int, i: int) -> tuple:
    z, o = K.zero, K.one
    return tuple(o if j == i else z for j in range(n))


def add_vectors(u, v) -> tuple:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v) -> tuple:
    return tuple(c * a for a in v)


def dot(u, v):
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")
    acc = None
    for a, b in zip(u, v):
        if a._zero or b._zero:
            continue
        acc = a * b if acc is None else acc + a * b
    if acc is None:
        return u[0] * 0 if u else None
    return acc


class Matrix:
    """Row-major matrix of CycScalar entries sharing one conductor."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Sequence[CycScalar]], ncols: int | None = None,
                 field: CyclotomicField | None = None):
        self.rows = [tuple(r) for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise ShapeError("column count required for an empty matrix")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ShapeError("ragged matrix")
        if field is None:
            if not self.rows or not ncols:
                raise ShapeError("field required for an empty matrix")
            field = CyclotomicField(self.rows[0][0].conductor)
        self.field = field

    @classmethod
    def zeros(cls, K: CyclotomicField, nrows: int, ncols: int) -> Matrix:
        z = (K.zero,) * ncols
        return cls([z] * nrows, ncols, K)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(zip(*self.rows), self.nrows, self.field) if self.nrows else \
            Matrix([], 0, self.field)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(self.rows)))

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix((add_vectors(a, b) for a, b in zip(self.rows, other.rows)),
                      self.ncols, self.field)

    def __neg__(self) -> Matrix:
        return Matrix((tuple(-a for a in r) for r in self.rows), self.ncols, self.field)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __mul__(self, c) -> Matrix:
        return Matrix((scale(c, r) for r in self.rows), self.ncols, self.field)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        return matmul(self, other)

    def is_zero(self) -> bool:
        return all(a._zero for r in self.rows for a in r)

    def nonzero_entries(self):
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if not a._zero:
                    yield i, j, a

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


def identity(K: CyclotomicField, n: int) -> Matrix:
    return Matrix((unit_vector(K, n, i) for i in range(n)), n, K)


def _sparse_rows(m: Matrix):
    return [[(j, a) for j, a in enumerate(r) if not a._zero] for r in m.rows]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    K = a.field
    sb = _sparse_rows(b)
    out = []
    for row in a.rows:
        acc = [None] * b.ncols
        for k, x in enumerate(row):
            if x._zero:
                continue
            for j, y in sb[k]:
                t = x * y
                acc[j] = t if acc[j] is None else acc[j] + t
        out.append(tuple(K.zero if v is None else v for v in acc))
    return Matrix(out, b.ncols, K)


def matvec(m: Matrix, v: Sequence) -> tuple:
    if m.ncols != len(v):
        raise ShapeError(f"cannot apply {m.shape} matrix to vector of length {len(v)}")
    return tuple(_sparse_dot(r, v, m.field) for r in m.rows)


def vecmat(v: Sequence, m: Matrix) -> tuple:
    """Row vector times matrix: a linear combination of the rows of m."""
    if m.nrows != len(v):
        raise ShapeError(f"cannot apply vector of length {len(v)} to {m.shape} matrix")
    acc = [None] * m.ncols
    for c, r in zip(v, m.rows):
        if c._zero:
            continue
        for j, y in enumerate(r):
            if not y._zero:
                t = c * y
                acc[j] = t if acc[j] is None else acc[j] + t
    z = m.field.zero
    return tuple(z if a is None else a for a in acc)


def _sparse_dot(r, v, K):
    acc = None
    for a, b in zip(r, v):
        if a._zero or b._zero:
            continue
        t = a * b
        acc = t if acc is None else acc + t
    return K.zero if acc is None else acc


# -- elimination -----------------------------------------------------------

class _Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Rows are inserted one at a time; each new row is reduced against the
    existing pivots and, if it survives, its pivot is cleared from every other
    row.  Cheap for tall sparse systems whose rank is small.
    """

    __slots__ = ("ncols", "rows", "pivot_of", "field")

    def __init__(self, ncols: int, field: CyclotomicField):
        self.ncols = ncols
        self.field = field
        self.rows: dict[int, list] = {}   # pivot column -> row (list)
        self.pivot_of = self.rows

    def reduce(self, vec) -> list:
        v = list(vec)
        for j in range(self.ncols):
            a = v[j]
            if a._zero:
                continue
            prow = self.rows.get(j)
            if prow is None:
                continue
            for k in range(j, self.ncols):
                b = prow[k]
                if not b._zero:
                    v[k] = v[k] - a * b
        return v

    def add(self, vec) -> bool:
        v = self.reduce(vec)
        piv = next((j for j, a in enumerate(v) if not a._zero), None)
        if piv is None:
            return False
        inv = v[piv].inverse()
        v = [a if a._zero else a * inv for a in v]
        nz = [(k, b) for k, b in enumerate(v) if not b._zero and k > piv]
        for j, prow in self.rows.items():
            c = prow[piv]
            if c._zero:
                continue
            prow[piv] = self.field.zero
            for k, b in nz:
                prow[k] = prow[k] - c * b
        self.rows[piv] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[tuple]:
        return [tuple(self.rows[p]) for p in self.pivots()]


def _echelon_of(rows: Iterable[Sequence], ncols: int, K: CyclotomicField) -> _Echelon:
    ech = _Echelon(ncols, K)
    for r in rows:
        if ech.rank == ncols:
            break
        if all(a._zero for a in r):
            continue
        ech.add(r)
    return ech


def rref(m: Matrix) -> Matrix:
    ech = _echelon_of(m.rows, m.ncols, m.field)
    basis = ech.basis()
    z = zero_vector(m.field, m.ncols)
    return Matrix(basis + [z] * (m.nrows - len(basis)), m.ncols, m.field)


def rank(m: Matrix) -> int:
    return _echelon_of(m.rows, m.ncols, m.field).rank


def _kernel_from_echelon(ech: _Echelon, K: CyclotomicField) -> list[tuple]:
    n = ech.ncols
    pivots = ech.pivots()
    pivset = set(pivots)
    vecs = []
    for f in range(n):
        if f in pivset:
            continue
        v = [K.zero] * n
        v[f] = K.one
        for p in pivots:
            c = ech.rows[p][f]
            if not c._zero:
                v[p] = -c
        vecs.append(tuple(v))
    return vecs


def kernel(m: Matrix) -> Subspace:
    """{v : m v = 0} as a canonical subspace of K^ncols."""
    ech = _echelon_of(m.rows, m.ncols, m.field)
    return Subspace(m.ncols, _kernel_from_echelon(ech, m.field), m.field)


def kernel_of_rows(rows: Iterable[Sequence], ncols: int, K: CyclotomicField) -> Subspace:
    """Kernel of the matrix with the given (possibly generated) rows."""
    ech = _echelon_of(rows, ncols, K)
    return Subspace(ncols, _kernel_from_echelon(ech, K), K)


def solve(m: Matrix, rhs: Sequence) -> tuple | None:
    """Some x with m x = rhs, or None when the system is inconsistent."""
    if len(rhs) != m.nrows:
        raise ShapeError(f"rhs length {len(rhs)} does not match {m.nrows} rows")
    K = m.field
    aug = (tuple(r) + (b,) for r, b in zip(m.rows, rhs))
    ech = _echelon_of(aug, m.ncols + 1, K)
    if m.ncols in ech.rows:
        return None
    x = [K.zero] * m.ncols
    for p, row in ech.rows.items():
        x[p] = row[m.ncols]
    return tuple(x)


def invert(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ShapeError("only square matrices can be inverted")
    n = m.nrows
    K = m.field
    aug = [tuple(r) + unit_vector(K, n, i) for i, r in enumerate(m.rows)]
    ech = _echelon_of(aug, 2 * n, K)
    if ech.pivots()[:n] != list(range(n)) or ech.rank < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix((tuple(ech.rows[i][n:]) for i in range(n)), n, K)


# -- subspaces -------------------------------------------------------------

class Subspace:
    """A subspace of K^ambient_dim with its canonical echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "field")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence], field: CyclotomicField):
        ech = _echelon_of(vectors, ambient_dim, field)
        self.ambient_dim = ambient_dim
        self.field = field
        self.pivots = tuple(ech.pivots())
        self.basis = tuple(tuple(ech.rows[p]) for p in self.pivots)

    @classmethod
    def zero(cls, K: CyclotomicField, n: int) -> Subspace:
        return cls(n, [], K)

    @classmethod
    def full(cls, K: CyclotomicField, n: int) -> Subspace:
        return cls(n, (unit_vector(K, n, i) for i in range(n)), K)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim, self.field)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __contains__(self, v) -> bool:
        return member(self, v)

    def coordinates(self, v) -> tuple:
        """Coefficients of v in the echelon basis (the entries at the pivots)."""
        if not member(self, v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def from_coordinates(self, coords) -> tuple:
        if len(coords) != self.dim:
            raise ShapeError("coordinate vector has the wrong length")
        if not self.dim:
            return zero_vector(self.field, self.ambient_dim)
        return vecmat(coords, self.matrix())

    def extend_functional(self, values) -> tuple:
        """Functional on K^ambient agreeing with `values` on the echelon basis.

        Supported on the pivot coordinates, i.e. zero on the complement spanned
        by the non-pivot unit vectors.
        """
        if len(values) != self.dim:
            raise ShapeError("need one value per basis vector")
        out = [self.field.zero] * self.ambient_dim
        for p, c in zip(self.pivots, values):
            out[p] = c
        return tuple(out)

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(member(other, b) for b in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return sum_spaces(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return intersect(self, other)

    def annihilator(self) -> Subspace:
        """{w : <b, w> = 0 for every basis vector b}."""
        if not self.dim:
            return Subspace.full(self.field, self.ambient_dim)
        return kernel(self.matrix())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def span(vectors: Iterable[Sequence], ambient_dim: int, K: CyclotomicField) -> Subspace:
    return Subspace(ambient_dim, vectors, K)


def member(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient_dim:
        raise ShapeError(f"vector length {len(v)} vs ambient {s.ambient_dim}")
    # subtract the combination dictated by the pivot entries
    residual = list(v)
    for p, b in zip(s.pivots, s.basis):
        c = residual[p]
        if c._zero:
            continue
        for k in range(p, s.ambient_dim):
            y = b[k]
            if not y._zero:
                residual[k] = residual[k] - c * y
    return all(a._zero for a in residual)


def sum_spaces(s: Subspace, t: Subspace) -> Subspace:
    if s.ambient_dim != t.ambient_dim:
        raise ShapeError("ambient dimensions differ")
    return Subspace(s.ambient_dim, list(s.basis) + list(t.basis), s.field)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    if s.ambient_dim != t.ambient_dim:
        raise ShapeError("ambient dimensions differ")
    eqs = list(s.annihilator().basis) + list(t.annihilator().basis)
    if not eqs:
        return Subspace.full(s.field, s.ambient_dim)
    return kernel_of_rows(eqs, s.ambient_dim, s.field)


# -- tensors ---------------------------------------------------------------

def tensor_rank(t: Matrix) -> int:
    return rank(t)


def row_space(t: Matrix) -> Subspace:
    """Span of the second-leg components of t."""
    return Subspace(t.ncols, t.rows, t.field)


def col_space(t: Matrix) -> Subspace:
    """Span of the first-leg components of t."""
    return Subspace(t.nrows, zip(*t.rows) if t.nrows else [], t.field)
