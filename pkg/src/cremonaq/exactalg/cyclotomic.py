"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as its residue modulo the n-th cyclotomic polynomial,
i.e. a vector of phi(n) rationals in the power basis 1, zeta, ..., zeta^(phi-1).
Rationals (``int`` and ``Fraction``) mix freely with cyclotomic elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

MAX_CONDUCTOR = 18


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the reduced coefficients of zeta_n^k for 0 <= k < n."""
    phi_n = cyclotomic_polynomial(n)
    deg = len(phi_n) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by zeta: shift, then fold the x^deg term back
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi_n[j]
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


def cyclotomic_reduce(n: int, raw) -> Cyclotomic:
    """Reduce a coefficient vector in powers of zeta_n to its canonical residue."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    table = _power_table(n)
    deg = len(table[0])
    acc = [Fraction(0)] * deg
    for k, c in enumerate(raw):
        c = _as_fraction(c)
        if not c:
            continue
        for j, t in enumerate(table[k % n]):
            if t:
                acc[j] += c * t
    return Cyclotomic(n, tuple(acc))


@dataclass(frozen=True, eq=False)
class Cyclotomic:
    """Element of Q(zeta_n) as a residue modulo Phi_n."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"conductor must be positive, got {self.n}")
        if self.n > MAX_CONDUCTOR:
            raise ValueError(f"conductor {self.n} exceeds supported maximum {MAX_CONDUCTOR}")
        if len(self.coeffs) != len(cyclotomic_polynomial(self.n)) - 1:
            raise ValueError("coefficient vector length must equal phi(n)")

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> Cyclotomic:
        return cls(n, tuple(Fraction(c) for c in _power_table(n)[k % n]))

    @classmethod
    def rational(cls, n: int, q) -> Cyclotomic:
        deg = len(cyclotomic_polynomial(n)) - 1
        return cls(n, (_as_fraction(q),) + (Fraction(0),) * (deg - 1))

    # -- predicates -----------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> Cyclotomic | None:
        if isinstance(other, Cyclotomic):
            if other.n == self.n:
                return other
            if other.is_rational():
                return Cyclotomic.rational(self.n, other.coeffs[0])
            if self.is_rational():
                return None  # handled by caller swapping roles
            raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")
        if isinstance(other, (int, Fraction, Rational)):
            return Cyclotomic.rational(self.n, other)
        return None

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic) and self.is_rational():
                return op(Cyclotomic.rational(other.n, self.coeffs[0]), other)
            return NotImplemented
        return op(self, o)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        return self._binary(other, lambda a, b: Cyclotomic(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs))))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self._binary(other, lambda a, b: Cyclotomic(a.n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs))))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, tuple(x * other for x in self.coeffs))
        return self._binary(other, _mul)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        return Cyclotomic(self.n, _inverse_coeffs(self.n, self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.n, tuple(x / other for x in self.coeffs))
        return self._binary(other, lambda a, b: _mul(a, b.inverse()))

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.n == self.n:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.coeffs[0] == other.coeffs[0]
            return False
        if isinstance(other, (int, Fraction, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.n, self.coeffs))

    def sort_key(self) -> tuple:
        return tuple(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"({body})_{self.n}"


def _mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    n = a.n
    table = _power_table(n)
    deg = len(a.coeffs)
    acc = [Fraction(0)] * deg
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            xy = x * y
            for t, r in enumerate(table[(i + j) % n]):
                if r:
                    acc[t] += xy * r
    return Cyclotomic(a.n, tuple(acc))


@lru_cache(maxsize=4096)
def _inverse_coeffs(n: int, coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    # Solve (multiplication-by-x matrix) * y = e_0 over Q.
    deg = len(coeffs)
    table = _power_table(n)
    cols = []
    for j in range(deg):
        col = [Fraction(0)] * deg
        for i, x in enumerate(coeffs):
            if x:
                for t, r in enumerate(table[(i + j) % n]):
                    if r:
                        col[t] += x * r
        cols.append(col)
    rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
    for c in range(deg):
        p = next(r for r in range(c, deg) if rows[r][c])
        rows[c], rows[p] = rows[p], rows[c]
        piv = rows[c][c]
        rows[c] = [v / piv for v in rows[c]]
        for r in range(deg):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
    return tuple(rows[i][deg] for i in range(deg))


@dataclass(frozen=True)
class GaloisMap:
    """The automorphism zeta_n -> zeta_n^k of Q(zeta_n)."""

    n: int
    k: int

    def __post_init__(self):
        if gcd(self.k, self.n) != 1:
            raise ValueError(f"exponent {self.k} is not a unit mod {self.n}")

    def __call__(self, x):
        return galois_apply(self, x)

    def __mul__(self, other: GaloisMap) -> GaloisMap:
        if other.n != self.n:
            raise ValueError("conductor mismatch")
        return GaloisMap(self.n, (self.k * other.k) % self.n)


def galois_apply(g: GaloisMap, x):
    """Apply zeta -> zeta^k; rationals are fixed."""
    if isinstance(x, (int, Fraction)):
        return x
    if x.n != g.n:
        if x.is_rational():
            return x
        raise ValueError(f"conductor mismatch: map has {g.n}, element has {x.n}")
    raw = [Fraction(0)] * g.n
    for i, c in enumerate(x.coeffs):
        raw[(i * g.k) % g.n] += c
    return cyclotomic_reduce(g.n, raw)
