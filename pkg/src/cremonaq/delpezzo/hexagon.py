"""Automorphisms of the degree 6 surface x0y0 = x1y1 = x2y2 over Q(zeta_n), up to Galois twists.

An element (c, p, e, k) acts on ([x], [y]) in three steps:

* sigma_k: apply zeta -> zeta^k to every coordinate,
* hex part: new x_i = x_{p[i]}, new y_i = y_{p[i]}, then swap the factors if e = 1,
* torus part c = (a, b): x -> (x0, z^a x1, z^b x2), y -> (y0, z^-a y1, z^-b y2).

Moving sigma_k past a torus element multiplies its character by k; moving the
hex part past it permutes (0, a, b), negates it under the exchange and then
renormalizes the first entry to 0. That gives the semidirect product law below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import gcd

from ..groupkit import FiniteGroup, closure

IDENTITY_PERM = (0, 1, 2)
MAX_N = 18


def _check_n(n: int):
    if not 2 <= n <= MAX_N:
        raise ValueError(f"conductor must lie in 2..{MAX_N}, got {n}")


def hex_on_character(p: tuple, e: int, c: tuple, n: int) -> tuple:
    """Character of H T_c H^-1 for the hex part (p, e)."""
    full = (0,) + tuple(c)
    moved = [full[p[i]] for i in range(3)]
    if e:
        moved = [-x for x in moved]
    return ((moved[1] - moved[0]) % n, (moved[2] - moved[0]) % n)


def character_matrix(p: tuple, e: int) -> tuple:
    """The integer 2x2 matrix of the hex part on the character lattice Z^2."""
    cols = [hex_on_character(p, e, v, 10**6) for v in ((1, 0), (0, 1))]
    lift = [tuple(x if x < 5 * 10**5 else x - 10**6 for x in col) for col in cols]
    return ((lift[0][0], lift[1][0]), (lift[0][1], lift[1][1]))


@dataclass(frozen=True)
class HexAut:
    n: int
    torus: tuple = (0, 0)
    perm: tuple = IDENTITY_PERM
    exchange: int = 0
    k: int = 1

    def __post_init__(self):
        if gcd(self.k, self.n) != 1:
            raise ValueError(f"galois exponent {self.k} is not a unit mod {self.n}")
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"not a permutation of 0..2: {self.perm}")
        object.__setattr__(self, "torus", (self.torus[0] % self.n, self.torus[1] % self.n))
        object.__setattr__(self, "exchange", self.exchange % 2)
        object.__setattr__(self, "k", self.k % self.n)

    @property
    def is_linear(self) -> bool:
        return self.k == 1

    @property
    def hex_part(self) -> tuple:
        return (self.perm, self.exchange)

    def __mul__(self, other: HexAut) -> HexAut:
        return hexaut_compose(self, other)


def hexaut_compose(u: HexAut, v: HexAut) -> HexAut:
    """u o v: apply v first."""
    if u.n != v.n:
        raise ValueError(f"conductor mismatch: {u.n} vs {v.n}")
    n = u.n
    twisted = (u.k * v.torus[0], u.k * v.torus[1])
    moved = hex_on_character(u.perm, u.exchange, twisted, n)
    torus = (u.torus[0] + moved[0], u.torus[1] + moved[1])
    perm = tuple(v.perm[u.perm[i]] for i in range(3))
    return HexAut(n, torus, perm, u.exchange + v.exchange, u.k * v.k)


def hex_identity(n: int) -> HexAut:
    return HexAut(n)


def torus_element(n: int, a: int, b: int) -> HexAut:
    return HexAut(n, (a, b))


def semilinear_commutes(h: HexAut, g: HexAut) -> bool:
    if h.n != g.n:
        raise ValueError(f"conductor mismatch: {h.n} vs {g.n}")
    return hexaut_compose(h, g) == hexaut_compose(g, h)


def d6_elements() -> list[tuple]:
    """The 12 hex parts (p, e) of Sym_3 x Z/2."""
    return [(p, e) for e in (0, 1) for p in permutations(range(3))]


def classify_hex(p: tuple, e: int) -> str:
    """'identity', 'transposition' or '3-cycle', with '+exchange' when e = 1."""
    fixed = sum(p[i] == i for i in range(3))
    base = {3: "identity", 1: "transposition", 0: "3-cycle"}[fixed]
    return base + ("+exchange" if e else "")


H1 = ((1, 2, 0), 0)
H2 = ((0, 2, 1), 0)
H3 = (IDENTITY_PERM, 1)


def galois_twist(n: int = 6) -> HexAut:
    """Galois twist exchanging the factors with zeta -> zeta^(n-1)."""
    return HexAut(n, (0, 0), IDENTITY_PERM, 1, n - 1)


def hexagon_generators(n: int = 6) -> list[HexAut]:
    gens = [HexAut(n, (0, 0), p, e) for p, e in (H1, H2, H3)]
    gens += [torus_element(n, 1, 0), torus_element(n, 0, 1)]
    return gens


def build_hexagon_group(n: int = 6) -> FiniteGroup:
    return closure(hexagon_generators(n), identity=hex_identity(n))


def torus_subgroup(G: FiniteGroup) -> FiniteGroup:
    elems = [g for g in G if g.perm == IDENTITY_PERM and not g.exchange and g.k == 1]
    n = elems[0].n
    return FiniteGroup(elems, [torus_element(n, 1, 0), torus_element(n, 0, 1)], hex_identity(n))


@dataclass(frozen=True)
class CentralizerReport:
    n: int
    twist: HexAut
    solutions: tuple
    hex_class: str

    @property
    def count(self) -> int:
        return len(self.solutions)

    def within_bound(self) -> bool:
        return self.count <= self.n


def torus_centralizer(n: int, g: HexAut) -> CentralizerReport:
    """All torus elements tau of mu_n^2 with tau g = g tau, by exhaustive search."""
    _check_n(n)
    if g.n != n:
        raise ValueError(f"conductor mismatch: {g.n} vs {n}")
    sols = tuple(
        (a, b) for a, b in product(range(n), repeat=2)
        if semilinear_commutes(torus_element(n, a, b), g)
    )
    return CentralizerReport(n, g, sols, classify_hex(g.perm, g.exchange))


def units(n: int) -> list[int]:
    return [k for k in range(1, n) if gcd(k, n) == 1]
