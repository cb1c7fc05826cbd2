"""Exact arithmetic in the cyclotomic fields Q(w_n).

An element of Q(w_n) is stored as an integer coefficient vector of length
phi(n) together with a positive common denominator, reduced modulo the n-th
cyclotomic polynomial.  The representation is canonical, so equality is
syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "CycScalar",
    "CyclotomicField",
    "ConductorMismatch",
    "cyclotomic_polynomial",
    "omega",
    "embed",
]


class ConductorMismatch(ValueError):
    pass


def _poly_divmod(num, den):
    """Long division of coefficient lists (lowest degree first)."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] / lead
        q[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    rem = num[: len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[Fraction, ...]:
    if n == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, _cyclotomic(d))
            if rem:
                raise ArithmeticError("inexact cyclotomic division")
    return tuple(num)


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Phi_n as a coefficient list, constant term first.

    Computed by exact division of x^n - 1 by Phi_d for all proper divisors d.
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    return list(_cyclotomic(n))


class _Context:
    """Per-conductor reduction tables (integer, since Phi_n is monic in Z[x])."""

    __slots__ = ("n", "deg", "reduce", "one", "zero")

    def __init__(self, n: int):
        phi = [int(c) for c in _cyclotomic(n)]
        self.n = n
        self.deg = deg = len(phi) - 1
        # reduce[k] = x^k mod Phi_n for 0 <= k <= 2*deg - 2
        table = []
        cur = [0] * deg
        cur[0] = 1
        for _ in range(max(2 * deg - 1, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * phi[i]
        self.reduce = table
        self.zero = None
        self.one = None


@lru_cache(maxsize=None)
def _context(n: int) -> _Context:
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    ctx = _Context(n)
    ctx.zero = CycScalar._make(ctx, (0,) * ctx.deg, 1)
    ctx.one = CycScalar._make(ctx, (1,) + (0,) * (ctx.deg - 1), 1)
    return ctx


class CycScalar:
    """An element of Q(w_n); immutable."""

    __slots__ = ("_ctx", "num", "den", "_zero")

    @classmethod
    def _make(cls, ctx, num, den):
        self = object.__new__(cls)
        self._ctx = ctx
        self.num = num
        self.den = den
        self._zero = not any(num)
        return self

    @classmethod
    def _normalized(cls, ctx, num, den):
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = gcd(den, *num)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        if not any(num):
            den = 1
        return cls._make(ctx, tuple(num), den)

    def __new__(cls, conductor: int, coeffs=(0,)):
        ctx = _context(conductor)
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > ctx.deg:
            # reduce an arbitrary polynomial in w modulo Phi_n
            _, fr = _poly_divmod(fr, _cyclotomic(conductor))
        fr = fr + [Fraction(0)] * (ctx.deg - len(fr))
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls._normalized(ctx, tuple(int(c * den) for c in fr), den)

    # -- accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._ctx.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return self._zero

    def is_one(self) -> bool:
        return self is self._ctx.one or (self.den == 1 and self.num == self._ctx.one.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other._ctx is not self._ctx:
                raise ConductorMismatch(
                    f"conductors differ: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            num = (other.numerator,) + (0,) * (self._ctx.deg - 1)
            return CycScalar._make(self._ctx, num, other.denominator)
        return NotImplemented

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other._zero:
            return self
        if self._zero:
            return other
        a, b = self.den, other.den
        if a == b:
            return CycScalar._normalized(
                self._ctx, tuple(x + y for x, y in zip(self.num, other.num)), a
            )
        return CycScalar._normalized(
            self._ctx,
            tuple(x * b + y * a for x, y in zip(self.num, other.num)),
            a * b,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._make(self._ctx, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._zero or other._zero:
            return self._ctx.zero
        ctx = self._ctx
        deg = ctx.deg
        if deg == 1:
            return CycScalar._normalized(
                ctx, (self.num[0] * other.num[0],), self.den * other.den
            )
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(self.num):
            if x:
                for j, y in enumerate(other.num):
                    if y:
                        prod[i + j] += x * y
        out = list(prod[:deg])
        red = ctx.reduce
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(red[k]):
                    if r:
                        out[i] += c * r
        return CycScalar._normalized(ctx, tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        if self._zero:
            raise ZeroDivisionError("inversion of zero in a cyclotomic field")
        ctx = self._ctx
        deg = ctx.deg
        if deg == 1:
            return CycScalar._normalized(ctx, (self.den,), self.num[0])
        # solve (multiplication-by-self matrix) * c = e_0 over Q
        basis = [
            CycScalar._make(ctx, tuple(int(i == k) for i in range(deg)), 1)
            for k in range(deg)
        ]
        cols = [(self * b).coeffs for b in basis]
        aug = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for c in range(deg):
            p = next(r for r in range(c, deg) if aug[r][c] != 0)
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [v / piv for v in aug[c]]
            for r in range(deg):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
        return CycScalar(ctx.n, [aug[i][deg] for i in range(deg)])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self._ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return (
                self._ctx is other._ctx and self.den == other.den and self.num == other.num
            )
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self._ctx.n, self.num, self.den))

    def __bool__(self):
        return not self._zero

    def __repr__(self):
        return f"CycScalar({self.conductor}, [{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mon = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
                if not mon:
                    terms.append(str(c))
                elif c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append("-" + mon)
                else:
                    terms.append(f"{c}*{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> CycScalar:
        return cls(int(obj["conductor"]), [Fraction(c) for c in obj["coeffs"]])


class CyclotomicField:
    """Convenience handle on Q(w_n): constants and conversions."""

    def __init__(self, n: int):
        self._ctx = _context(n)
        self.n = n

    @property
    def degree(self) -> int:
        return self._ctx.deg

    @property
    def zero(self) -> CycScalar:
        return self._ctx.zero

    @property
    def one(self) -> CycScalar:
        return self._ctx.one

    @property
    def omega(self) -> CycScalar:
        return omega(self.n)

    def __call__(self, value) -> CycScalar:
        if isinstance(value, CycScalar):
            if value.conductor == self.n:
                return value
            return embed(value, self.n)
        if isinstance(value, str):
            return self.parse(value)
        return self.one * Fraction(value)

    def parse(self, text: str) -> CycScalar:
        """Inverse of :func:`format_scalar`: comma separated coefficients."""
        parts = [Fraction(p.strip()) for p in text.split(",")]
        return CycScalar(self.n, parts)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("Q(w)", self.n))

    def __repr__(self):
        return f"CyclotomicField({self.n})"


@lru_cache(maxsize=None)
def omega(n: int) -> CycScalar:
    """The primitive n-th root of unity w = exp(2 pi i / n) as the class of x."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    if n <= 2:
        return CycScalar(n, [1 if n == 1 else -1])
    return CycScalar(n, [0, 1])


def embed(a: CycScalar, n: int) -> CycScalar:
    """Image of a under Q(w_d) -> Q(w_n), w_d -> w_n^(n/d); requires d | n."""
    d = a.conductor
    if d == n:
        return a
    if n % d:
        raise ConductorMismatch(f"cannot embed conductor {d} into {n}")
    w = omega(n) ** (n // d)
    result = _context(n).zero
    power = _context(n).one
    for c in a.coeffs:
        if c:
            result = result + power * c
        power = power * w
    return result


def format_scalar(a: CycScalar) -> str:
    """Compact exact string: the coefficient list joined by commas, trailing zeros dropped."""
    cs = list(a.coeffs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return ",".join(str(c) for c in cs)
