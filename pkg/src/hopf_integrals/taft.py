"""Taft Hopf algebras H_{n^2} and their named coideal subalgebras.

Basis g^i x^j (0 <= i, j < n) in lexicographic order, index i*n + j, with
g x g^{-1} = w x, so that x g = w^{-1} g x in normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import FinDimAlgebra
from .cointegrals import Cointegral, g_cointegrals, normalize_on
from .hopf import (
    GroupLike,
    HopfAlgebra,
    derive_antipode,
    extend_coproduct,
    verify_hopf_axioms,
)
from .integrals import CoidealSubalgebra
from .linalg import Matrix, Subspace, rank
from .scalars import CycScalar, CyclotomicField, omega

__all__ = [
    "TaftAlgebra",
    "build_taft",
    "normal_form",
    "gaussian_binomial",
    "delta_x_power",
    "p_beta",
    "y_powers",
    "coideal_v_p_beta",
    "hopf_sub_h_d",
    "p_d",
    "coideal_n_dx",
    "lambda_dx",
    "cointegral_tables",
]


def normal_form(word: str, n: int) -> tuple[int, int, int] | None:
    """Rewrite a word in g, x to w^e g^i x^j; returns (e mod n, i, j) or None for 0.

    Uses x g -> w^{-1} g x, g^n -> 1, x^n -> 0.
    """
    letters = list(word)
    e = 0
    # bubble every g to the left of every x; each swap costs a factor w^{-1}
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            if letters[k] == "x" and letters[k + 1] == "g":
                letters[k], letters[k + 1] = "g", "x"
                e -= 1
                changed = True
    i = letters.count("g")
    j = letters.count("x")
    if j >= n:
        return None
    return e % n, i % n, j


@dataclass
class TaftAlgebra:
    n: int
    hopf: HopfAlgebra
    omega: CycScalar

    @property
    def field(self) -> CyclotomicField:
        return self.hopf.field

    @property
    def dim(self) -> int:
        return self.hopf.dim

    def index(self, i: int, j: int) -> int:
        return (i % self.n) * self.n + j

    def elem(self, i: int, j: int = 0) -> tuple:
        """g^i x^j (i taken mod n; zero when j >= n)."""
        if j >= self.n:
            return self.hopf.algebra.zero()
        return self.hopf.basis_vector(self.index(i, j))

    @property
    def g(self) -> tuple:
        return self.elem(1, 0)

    @property
    def x(self) -> tuple:
        return self.elem(0, 1)

    def one(self) -> tuple:
        return self.hopf.one()

    def combo(self, terms: dict[tuple[int, int], object]) -> tuple:
        K = self.field
        v = [K.zero] * self.dim
        for (i, j), c in terms.items():
            if j < self.n:
                v[self.index(i, j)] = v[self.index(i, j)] + K(c)
        return tuple(v)

    def mul(self, *factors) -> tuple:
        return self.hopf.algebra.product(*factors)

    def power(self, a, k: int) -> tuple:
        return self.hopf.algebra.power(a, k)

    def add(self, *vs) -> tuple:
        return tuple(sum(cs[1:], cs[0]) for cs in zip(*vs))

    def scale(self, c, v) -> tuple:
        c = self.field(c)
        return tuple(c * a for a in v)

    def group_like(self, k: int) -> GroupLike:
        return GroupLike(self.hopf, self.elem(k % self.n, 0), k % self.n)

    def label(self, idx: int) -> str:
        i, j = divmod(idx, self.n)
        return f"g^{i} x^{j}"


def build_taft(n: int, verify: bool = True) -> TaftAlgebra:
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    K = CyclotomicField(n)
    w = omega(n)
    w_pows = [w ** e for e in range(n)]
    words = [("g" * i) + ("x" * j) for i in range(n) for j in range(n)]
    mult = []
    for a, wa in enumerate(words):
        for b, wb in enumerate(words):
            nf = normal_form(wa + wb, n)
            if nf is not None:
                e, i, j = nf
                mult.append((a, b, i * n + j, w_pows[e]))
    unit = [K.one] + [K.zero] * (n * n - 1)
    labels = [f"g^{i} x^{j}" for i in range(n) for j in range(n)]
    A = FinDimAlgebra(K, n * n, mult, unit, labels)

    gi, xi = n, 1   # indices of g and x
    gen_delta = {
        "g": {(gi, gi): K.one},
        "x": {(xi, 0): K.one, (gi, xi): K.one},
    }
    delta = extend_coproduct(A, gen_delta, words)
    counit = [K.one if j == 0 else K.zero for i in range(n) for j in range(n)]
    S = derive_antipode(A, delta, counit, [("g", gi), ("x", xi)], words)
    H = HopfAlgebra(A, delta, counit, S, family="taft", params={"n": n},
                    generators={"g": A.basis_vector(gi), "x": A.basis_vector(xi)})
    if verify:
        report = verify_hopf_axioms(H)
        if not report.ok:
            raise ArithmeticError(f"Taft algebra n={n} fails {report.failed()}")
    return TaftAlgebra(n, H, w)


# -- Gaussian binomial oracle ------------------------------------------------

def gaussian_binomial(k: int, j: int, q):
    """q-binomial coefficient via the q-Pascal rule C(k,j) = C(k-1,j-1) + q^j C(k-1,j)."""
    one = q ** 0
    zero = one * 0
    row = [one]
    for m in range(1, k + 1):
        new = []
        for i in range(m + 1):
            a = row[i - 1] if i >= 1 else zero
            b = row[i] if i < m else zero
            new.append(a + (q ** i) * b)
        row = new
    return row[j] if 0 <= j <= k else zero


def delta_x_power(T: TaftAlgebra, k: int) -> Matrix:
    """Closed form sum_j C_w(k, j) x^{k-j} g^j (x) x^j."""
    if not 0 <= k < T.n:
        raise ValueError("need 0 <= k < n")
    K = T.field
    rows = [[K.zero] * T.dim for _ in range(T.dim)]
    for j in range(k + 1):
        c = gaussian_binomial(k, j, T.omega)
        first = T.mul(T.elem(0, k - j), T.elem(j, 0))
        second = T.index(0, j)
        for i, a in enumerate(first):
            if not a.is_zero():
                rows[i][second] = rows[i][second] + c * a
    return Matrix(rows, T.dim, K)


# -- named families ------------------------------------------------------------

def _y(T: TaftAlgebra, beta) -> tuple:
    beta = T.field(beta)
    if beta.is_zero():
        raise ValueError("beta must be non-zero")
    return T.add(T.g, T.scale(beta, T.x))


def p_beta(T: TaftAlgebra, beta) -> tuple:
    """(1/n) sum_k (g + beta x)^k."""
    y = _y(T, beta)
    acc = T.one()
    cur = T.one()
    for _ in range(1, T.n):
        cur = T.mul(cur, y)
        acc = T.add(acc, cur)
    return T.scale(CycScalar(T.n, [1]) / T.n, acc)


def y_powers(T: TaftAlgebra, beta) -> list[tuple]:
    y = _y(T, beta)
    out = [T.one()]
    for _ in range(1, T.n):
        out.append(T.mul(out[-1], y))
    return out


def coideal_v_p_beta(T: TaftAlgebra, beta) -> CoidealSubalgebra:
    vecs = y_powers(T, beta)
    if rank(Matrix(vecs, T.dim, T.field)) != T.n:
        raise ArithmeticError("powers of g + beta x are not independent")
    return CoidealSubalgebra(T.hopf, vecs, name=f"V_P(beta={beta})").require()


def _check_divisor(T: TaftAlgebra, d: int):
    if d < 1 or T.n % d:
        raise ValueError(f"d={d} does not divide n={T.n}")


def hopf_sub_h_d(T: TaftAlgebra, d: int) -> CoidealSubalgebra:
    _check_divisor(T, d)
    vecs = [T.elem(d * k) for k in range(T.n // d)]
    return CoidealSubalgebra(T.hopf, vecs, name=f"H_{d}").require()


def p_d(T: TaftAlgebra, d: int) -> tuple:
    """(d/n) sum_k g^{dk}."""
    _check_divisor(T, d)
    acc = T.combo({(d * k, 0): 1 for k in range(T.n // d)})
    return T.scale(CycScalar(T.n, [d]) / T.n, acc)


def coideal_n_dx(T: TaftAlgebra, d: int) -> CoidealSubalgebra:
    _check_divisor(T, d)
    vecs = [T.elem(d * m, l) for m in range(T.n // d) for l in range(T.n)]
    return CoidealSubalgebra(T.hopf, vecs, name=f"N_{d},x").require()


def lambda_dx(T: TaftAlgebra, d: int) -> tuple:
    """sum_k g^{dk} x^{n-1}."""
    _check_divisor(T, d)
    return T.combo({(d * k, T.n - 1): 1 for k in range(T.n // d)})


# -- cointegral tables -----------------------------------------------------------

def _closed_form_v_p_beta(T, beta, j):
    """Values on the powers (g+beta x)^k; None when no cointegral exists."""
    n = T.n
    if j % n != n - 1:
        return None
    return [T.field(n if k == n - 1 else 0) for k in range(n)]


def _closed_form_h_d(T, d, j):
    n = T.n
    if j % d:
        return None
    k = (j // d) % (n // d)
    return [T.field(n // d if m == k else 0) for m in range(n // d)]


def _closed_form_n_dx(T, d, j):
    n = T.n
    if (j + 1) % d:
        return None
    k = ((j + 1) // d) % (n // d)
    return [T.field(1 if (l == n - 1 and m == k) else 0)
            for m in range(n // d) for l in range(n)]


def cointegral_tables(T: TaftAlgebra, betas: Sequence = (1,), ds: Sequence[int] | None = None):
    """Solve for every g^j-cointegral on each named family and compare to closed forms.

    Returns a list of row dicts; each row has ``ok`` when solver dimension and
    normalized values agree with the closed form.
    """
    from .serialize import scalar_str
    n = T.n
    H = T.hopf
    if ds is None:
        ds = [d for d in range(1, n + 1) if n % d == 0]
    families = []
    for beta in betas:
        b = T.field(beta)
        families.append((f"V_P(beta={scalar_str(b)})", coideal_v_p_beta(T, b), p_beta(T, b),
                         y_powers(T, b), lambda j, b=b: _closed_form_v_p_beta(T, b, j)))
    for d in ds:
        families.append((f"H_{d}", hopf_sub_h_d(T, d), p_d(T, d),
                         [T.elem(d * m) for m in range(n // d)],
                         lambda j, d=d: _closed_form_h_d(T, d, j)))
    for d in ds:
        families.append((f"N_{d},x", coideal_n_dx(T, d), lambda_dx(T, d),
                         [T.elem(d * m, l) for m in range(n // d) for l in range(n)],
                         lambda j, d=d: _closed_form_n_dx(T, d, j)))
    rows = []
    for name, A, lam, test_vectors, closed in families:
        for j in range(n):
            g = T.group_like(j)
            sol = g_cointegrals(H, A.space, g)
            expected = closed(j)
            row = {"family": name, "g_exponent": j, "dim": sol.dim,
                   "expected_dim": 0 if expected is None else 1}
            ok = sol.dim == row["expected_dim"]
            if sol.dim == 1:
                phi = normalize_on(Cointegral(H, A.space, g, sol.basis[0]), lam)
                values = [phi(v) for v in test_vectors]
                row["values"] = [scalar_str(v) for v in values]
                ok = ok and expected is not None and values == expected
            row["ok"] = ok
            rows.append(row)
    return rows
