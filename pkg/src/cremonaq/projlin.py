"""Exact matrices, projective classes, element orders, lifts and Minkowski's bound."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Sequence

from .exactalg import Cyclotomic, MultiPoly, as_scalar, poly_compose_linear, rational_root

DEFAULT_ORDER_CAP = 720

Matrix = tuple  # tuple of row tuples


class OrderExceedsCap(ArithmeticError):
    """No power up to the cap is scalar."""

    def __init__(self, cap: int):
        super().__init__(f"order exceeds cap {cap}")
        self.cap = cap


class SingularMatrix(ValueError):
    pass


# -- plain exact matrices ------------------------------------------------------

def as_matrix(rows) -> Matrix:
    m = tuple(tuple(as_scalar(x) for x in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise ValueError("square matrix required")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        new = []
        for col in cols:
            s = Fraction(0)
            for k, x in nz:
                y = col[k]
                if y:
                    s = s + x * y
            new.append(s)
        out.append(tuple(new))
    return tuple(out)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def mat_scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        return mat_pow(mat_inverse(a), -k)
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(as_scalar(c[i]) for c in cols) for i in range(len(cols)))


def _eliminate(a: Matrix, rhs: Matrix | None = None):
    """Gauss-Jordan on [a | rhs]; returns (rank, det, reduced rhs or None)."""
    n = len(a)
    m = len(a[0]) if a else 0
    width = m + (len(rhs[0]) if rhs else 0)
    rows = [list(a[i]) + (list(rhs[i]) if rhs else []) for i in range(n)]
    det = Fraction(1)
    rank = 0
    for c in range(m):
        piv = next((r for r in range(rank, n) if rows[r][c]), None)
        if piv is None:
            det = Fraction(0)
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            det = -det
        p = rows[rank][c]
        det = det * p
        inv = 1 / p if isinstance(p, Fraction) else p.inverse()
        rows[rank] = [x * inv if x else x for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y if y else x for x, y in zip(rows[r], rows[rank])]
        rank += 1
    if rank < min(n, m):
        det = Fraction(0)
    out = tuple(tuple(row[m:width]) for row in rows[:m]) if rhs else None
    return rank, det, out


def det(a: Matrix):
    if len(a) == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if len(a) == 3:
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    return _eliminate(a)[1]


def rank(a: Matrix) -> int:
    return _eliminate(a)[0]


def mat_inverse(a: Matrix) -> Matrix:
    r, d, inv = _eliminate(a, identity(len(a)))
    if r < len(a):
        raise SingularMatrix("matrix is singular")
    return inv


def solve(a: Matrix, b: Sequence) -> tuple:
    r, _, x = _eliminate(a, tuple((as_scalar(v),) for v in b))
    if r < len(a):
        raise SingularMatrix("matrix is singular")
    return tuple(row[0] for row in x)


def scalar_of(a: Matrix):
    """The c with a == c * Id, or None."""
    c = a[0][0]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if (i == j and x != c) or (i != j and x):
                return None
    return c


def _entry_key(x) -> tuple:
    return x.sort_key() if isinstance(x, Cyclotomic) else (x,)


# -- projective classes --------------------------------------------------------

class ProjMap:
    """Invertible matrix up to (weighted) scalar equivalence.

    Coordinate i of weight w_i scales by s**w_i; with all weights 1 this is
    ordinary PGL_n equivalence. Equality and hashing use the canonical
    representative.
    """

    __slots__ = ("matrix", "weights", "_key")

    def __init__(self, matrix, weights: Sequence[int] | None = None, *, check: bool = True):
        m = as_matrix(matrix) if check else matrix
        n = len(m)
        self.matrix = m
        self.weights = tuple(weights) if weights is not None else (1,) * n
        if len(self.weights) != n:
            raise ValueError("one weight per coordinate required")
        self._key = None
        if check and not det(m):
            raise SingularMatrix("projective map needs an invertible matrix")

    @classmethod
    def identity(cls, n: int, weights: Sequence[int] | None = None) -> ProjMap:
        return cls(identity(n), weights, check=False)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def key(self) -> Matrix:
        if self._key is None:
            self._key = _canonical_matrix(self.matrix, self.weights)
        return self._key

    def canonical(self) -> ProjMap:
        return ProjMap(self.key, self.weights, check=False)

    def __mul__(self, other: ProjMap) -> ProjMap:
        if other.weights != self.weights:
            raise ValueError("weight mismatch")
        return ProjMap(mat_mul(self.matrix, other.matrix), self.weights, check=False)

    def __pow__(self, k: int) -> ProjMap:
        return ProjMap(mat_pow(self.matrix, k), self.weights, check=False)

    def inverse(self) -> ProjMap:
        return ProjMap(mat_inverse(self.matrix), self.weights, check=False)

    def is_identity(self) -> bool:
        return self.key == identity(self.n)

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self.weights == other.weights and self.key == other.key

    def __hash__(self):
        return hash((self.weights, self.key))

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.key)
        w = "" if set(self.weights) == {1} else f" weights={self.weights}"
        return f"ProjMap[{rows}]{w}"


def _scale_rows(m: Matrix, weights, s) -> Matrix:
    return tuple(tuple(x * s ** w if x else x for x in row) for row, w in zip(m, weights))


def _canonical_matrix(m: Matrix, weights) -> Matrix:
    w0 = min(weights)
    e = next(x for row, w in zip(m, weights) if w == w0 for x in row if x)
    if set(weights) == {1}:
        if e == 1:
            return m
        inv = 1 / e if isinstance(e, Fraction) else e.inverse()
        return tuple(tuple(x * inv if x else x for x in row) for row in m)
    if w0 == 1:
        s = 1 / e if isinstance(e, Fraction) else e.inverse()
        return _scale_rows(m, weights, s)
    # s**w0 * e == 1 determines s only up to w0-th roots of unity
    if not isinstance(e, Fraction):
        raise NotImplementedError("weighted canonical form with minimal weight > 1 needs rational entries")
    s = rational_root(1 / e, w0)
    if s is None:
        s = rational_root(-1 / e, w0) if w0 % 2 else None
        if s is not None:
            s = -s
    if s is None:
        # no normalizing scalar exists in Q; fall back to the lexicographic least
        # among scalings by +-1, which still separates classes over Q
        candidates = [m, _scale_rows(m, weights, Fraction(-1))]
    else:
        candidates = [_scale_rows(m, weights, s)]
        if w0 % 2 == 0:
            candidates.append(_scale_rows(m, weights, -s))
    return min(candidates, key=lambda c: tuple(_entry_key(x) for row in c for x in row))


def proj_canonical(m: ProjMap) -> ProjMap:
    """The unique canonical representative of the class of ``m``."""
    if not det(m.matrix):
        raise SingularMatrix("singular matrix")
    return m.canonical()


def proj_order(m: ProjMap, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Least k <= cap with m^k trivial; raises OrderExceedsCap otherwise."""
    if cap < 1:
        raise ValueError("cap must be positive")
    if not det(m.matrix):
        raise SingularMatrix("singular matrix")
    ident = ProjMap.identity(m.n, m.weights)
    p = m
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = p * m
    raise OrderExceedsCap(cap)


# -- lifting lemmas --------------------------------------------------------------

def bezout(a: int, b: int) -> tuple[int, int]:
    """x, y with a*x + b*y == gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


def coprime_root(a, b, m: int, n: int):
    """For coprime m, n and a^m == b^n, the c = a^x b^y (nx + my = 1) with c^n = a, c^m = b."""
    if gcd(m, n) != 1:
        raise ValueError(f"exponents {m}, {n} are not coprime")
    a, b = as_scalar(a), as_scalar(b)
    if not a or not b:
        raise ValueError("a and b must be nonzero")
    if a ** m != b ** n:
        raise ValueError("precondition a^m == b^n fails")
    x, y = bezout(n, m)
    c = a ** x * b ** y
    assert c ** n == a and c ** m == b
    return c


def lift_to_sl(alpha: ProjMap, r: int) -> Matrix:
    """Representative A of alpha with det A = 1 and A^r = Id (needs gcd(r, n) = 1)."""
    n = alpha.n
    if gcd(r, n) != 1:
        raise ValueError(f"order {r} is not coprime to dimension {n}")
    if proj_order(alpha, max(r, 1)) != r:
        raise ValueError(f"class does not have order {r}")
    B = alpha.matrix
    lam = scalar_of(mat_pow(B, r))
    mu = coprime_root(det(B), lam, r, n)
    A = mat_scale(B, 1 / mu if isinstance(mu, Fraction) else mu.inverse())
    assert det(A) == 1 and mat_pow(A, r) == identity(n)
    return A


def form_multiplier(F: MultiPoly, M: Matrix):
    """The c with F(Mx) == c F(x), or None."""
    G = poly_compose_linear(F, M)
    if not F:
        return Fraction(1) if not G else None
    exp, coeff = F.leading()
    c = G.coefficient(exp) / coeff
    return c if G == F * c else None


def lift_form_preserving(alpha: ProjMap, F: MultiPoly) -> tuple[Matrix, Matrix]:
    """The lift M of alpha with M^m = Id (m the order of alpha), together with -M.

    With F(Mx) = lam F(x), M^m = mu Id and a = det M one has mu^d = lam^m and
    a^m = mu^n; Bezout on the coprime d, n gives c = lam^x a^y with c^m = mu.
    """
    n = alpha.n
    d = F.degree()
    if gcd(d, n) != 1:
        raise ValueError(f"degree {d} not coprime to dimension {n}")
    M = alpha.matrix
    lam = form_multiplier(F, M)
    if lam is None:
        raise ValueError("class does not preserve the form")
    m = proj_order(alpha)
    mu = scalar_of(mat_pow(M, m))
    x, y = bezout(d, n)
    c = lam ** x * det(M) ** y
    if c ** m != mu:
        raise ArithmeticError("normalizing scalar failed")  # cannot happen when hypotheses hold
    lift = mat_scale(M, 1 / c if isinstance(c, Fraction) else c.inverse())
    assert mat_pow(lift, m) == identity(n)
    return lift, mat_scale(lift, -1)


# -- order-3 normal forms ----------------------------------------------------------

def companion3(lam) -> Matrix:
    lam = as_scalar(lam)
    z, o = Fraction(0), Fraction(1)
    return ((z, z, lam), (o, z, z), (z, o, z))


S_ORDER3 = as_matrix([[0, -1], [1, -1]])


def _conjugator_s_block(a1, a2) -> Matrix:
    return as_matrix([
        [a1 + 2 * a2 - 1, -2 * a1 - a2 - 1, a1 - a2 - 1],
        [-3, 3, 0],
        [-3, 0, 3],
    ])


def _conjugator_s_inverse_block(a1, a2) -> Matrix:
    q = a1 * a1 + a1 * a2 + a2 * a2
    return as_matrix([
        [q + 1, -q + 1, 1],
        [-2 * a1 - a2, a1 - a2, a1 + 2 * a2],
        [-a1 - 2 * a2, 2 * a1 + a2, -a1 + a2],
    ])


def _normal_form_conjugator(A: Matrix) -> Matrix | None:
    """Explicit conjugators for the block forms [[1, a1, a2], [0, C]] with C of order 3."""
    if len(A) != 3 or A[1][0] or A[2][0] or A[0][0] != 1:
        return None
    a1, a2 = A[0][1], A[0][2]
    C = (A[1][1:], A[2][1:])
    if C == ((0, -1), (1, -1)):
        M = _conjugator_s_block(a1, a2)
    elif C == ((-1, 1), (-1, 0)):
        M = _conjugator_s_inverse_block(a1, a2)
    else:
        return None
    return M if det(M) else None


def _cyclic_candidates(n: int, seed: int):
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    yield from basis
    yield "normal-form"
    for i in range(n):
        for j in range(i + 1, n):
            yield tuple(a + b for a, b in zip(basis[i], basis[j]))
    rng = random.Random(seed)
    while True:
        yield tuple(Fraction(rng.randint(-10, 10)) for _ in range(n))


def _cyclic_conjugator(A: Matrix, seed: int = 0, tries: int = 1000) -> Matrix:
    n = len(A)
    for k, v in enumerate(_cyclic_candidates(n, seed)):
        if k > tries:
            break
        if v == "normal-form":
            M = _normal_form_conjugator(A)
            if M is not None:
                return M
            continue
        cols = [v]
        for _ in range(n - 1):
            cols.append(mat_vec(A, cols[-1]))
        M = from_columns(cols)
        if det(M):
            return M
    raise ArithmeticError("no cyclic vector found")


def companion_order3_pgl3(alpha: ProjMap, seed: int = 0) -> tuple[Matrix, Matrix]:
    """(B, M) with B the companion form [[0,0,lam],[1,0,0],[0,1,0]] and M^-1 A M = B.

    A is the stored representative of alpha and A^3 = lam Id.
    """
    if alpha.n != 3:
        raise ValueError("dimension 3 required")
    if proj_order(alpha, 3) != 3:
        raise ValueError("class does not have order 3")
    A = alpha.matrix
    lam = scalar_of(mat_pow(A, 3))
    M = _cyclic_conjugator(A, seed)
    B = companion3(lam)
    assert mat_mul(mat_inverse(M), mat_mul(A, M)) == B
    return B, M


def canonical_order3_pgl2(alpha: ProjMap) -> tuple[str, Matrix]:
    """Conjugate the SL_2 lift of alpha or of alpha^-1 onto S = [[0,-1],[1,-1]].

    Both always work over Q; the one whose conjugator has positive determinant
    is returned, as ("alpha", M) or ("inverse", M).
    """
    if alpha.n != 2:
        raise ValueError("dimension 2 required")
    if proj_order(alpha, 3) != 3:
        raise ValueError("class does not have order 3")
    A = lift_to_sl(alpha, 3)
    for which, X in (("alpha", A), ("inverse", mat_inverse(A))):
        M = _cyclic_conjugator(X)
        if det(M) > 0:
            assert mat_mul(mat_inverse(M), mat_mul(X, M)) == S_ORDER3
            return which, M
    raise ArithmeticError("unreachable: conjugators of A and A^-1 have opposite signs")


# -- Minkowski's bound ---------------------------------------------------------------

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def minkowski_exponent(n: int, p: int) -> int:
    """Sum of floor(n / (p^k (p-1))) over k >= 0."""
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total, q = 0, p - 1
    while q <= n:
        total += n // q
        q *= p
    return total


@dataclass(frozen=True)
class MinkowskiTable:
    n: int
    exponents: dict
    bound: int


def minkowski_table(n: int) -> MinkowskiTable:
    exps = {p: minkowski_exponent(n, p) for p in range(2, n + 2) if is_prime(p)}
    return MinkowskiTable(n, exps, prod(p ** e for p, e in exps.items()))


def minkowski_bound(n: int) -> int:
    return minkowski_table(n).bound
