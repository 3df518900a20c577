"""Picard lattice of the blow-up of P^2 at r points.

A class (d; m_1..m_r) stands for d L - sum m_i E_i, so E_i = (0; 0..-1..0) and
the line through points i, j is (1; ..1..1..). The form is diag(1, -1, ..., -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .groupkit import FiniteGroup, Perm, closure

MAX_GRAPH_VERTICES = 16
DEFAULT_BOX = (0, 6, -1, 3)


@dataclass(frozen=True, order=True)
class PicClass:
    d: int
    m: tuple

    @property
    def r(self) -> int:
        return len(self.m)

    def dot(self, other: PicClass) -> int:
        if self.r != other.r:
            raise ValueError("classes live on different blow-ups")
        return self.d * other.d - sum(a * b for a, b in zip(self.m, other.m))

    def square(self) -> int:
        return self.dot(self)

    def __add__(self, other: PicClass) -> PicClass:
        return PicClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> PicClass:
        return PicClass(-self.d, tuple(-a for a in self.m))

    def __sub__(self, other: PicClass) -> PicClass:
        return self + (-other)

    def __repr__(self):
        return f"({self.d}; {', '.join(map(str, self.m))})"


def line_class(r: int) -> PicClass:
    return PicClass(1, (0,) * r)


def exceptional(i: int, r: int) -> PicClass:
    """E_i for 1-based i."""
    if not 1 <= i <= r:
        raise ValueError(f"index {i} outside 1..{r}")
    return PicClass(0, tuple(-1 if j == i - 1 else 0 for j in range(r)))


def line_through(i: int, j: int, r: int) -> PicClass:
    """Strict transform of the line through points i and j (1-based)."""
    if i == j:
        raise ValueError("two distinct points required")
    return PicClass(1, tuple(1 if k in (i - 1, j - 1) else 0 for k in range(r)))


def conic_through(indices: Sequence[int], r: int) -> PicClass:
    """Strict transform of a conic through the listed points."""
    idx = {i - 1 for i in indices}
    return PicClass(2, tuple(1 if k in idx else 0 for k in range(r)))


def canonical_class(r: int) -> PicClass:
    return PicClass(-3, (-1,) * r)


def _check_r(r: int):
    if not 1 <= r <= 8:
        raise ValueError(f"r must lie in 1..8, got {r}")


def _sort_key(c: PicClass):
    # E's first, then by degree, then lexicographically (larger m first)
    return (c.d, tuple(-x for x in c.m))


def enumerate_minus_one(r: int, box: tuple[int, int, int, int] = DEFAULT_BOX) -> list[PicClass]:
    """All classes with c.c = -1 and c.K = -1 inside the box d in [d0, d1], m_i in [m0, m1].

    c.K = -1 means sum m_i = 3d - 1 and c.c = -1 means sum m_i^2 = d^2 + 1; the
    search fills coordinates left to right and prunes on both partial sums.
    """
    _check_r(r)
    d_lo, d_hi, m_lo, m_hi = box
    out = []
    for d in range(d_lo, d_hi + 1):
        target_sum, target_sq = 3 * d - 1, d * d + 1
        cur: list[int] = []

        def rec(pos: int, s: int, sq: int):
            left = r - pos
            if left == 0:
                if s == target_sum and sq == target_sq:
                    out.append(PicClass(d, tuple(cur)))
                return
            if sq > target_sq:
                return
            if not (m_lo * left <= target_sum - s <= m_hi * left):
                return
            for x in range(m_lo, m_hi + 1):
                cur.append(x)
                rec(pos + 1, s + x, sq + x * x)
                cur.pop()

        rec(0, 0, 0)
    return sorted(out, key=_sort_key)


def exceptional_pairs(r: int = 5, degree_bound: int = 3) -> list[tuple[PicClass, PicClass]]:
    """Unordered pairs {A, B} with A^2 = B^2 = 0 and A + B = -K.

    A^2 = 0 forces sum m_i^2 = d^2, so |m_i| <= d and only the degree needs a bound.
    """
    if r != 5:
        raise ValueError("exceptional pairs are defined for r = 5")
    K = canonical_class(r)
    minus_k = -K
    found = set()
    for d in range(0, degree_bound + 1):
        for m in product(range(-d, d + 1), repeat=r):
            A = PicClass(d, m)
            if A.square() != 0 or A.dot(K) != -2:
                continue
            B = minus_k - A
            if B.square() != 0:
                continue
            found.add(tuple(sorted((A, B), key=_sort_key)))
    return sorted(found, key=lambda p: (_sort_key(p[0]), _sort_key(p[1])))


def skew_quadruples(r: int = 4) -> list[frozenset]:
    """Sets of four pairwise disjoint (-1)-classes."""
    if r != 4:
        raise ValueError("skew quadruples are computed for r = 4")
    classes = enumerate_minus_one(r)
    return [frozenset(q) for q in combinations(classes, 4)
            if all(a.dot(b) == 0 for a, b in combinations(q, 2))]


def class_label(c: PicClass) -> str:
    """E1, l12, C or the raw vector."""
    r = c.r
    if c.d == 0 and sorted(c.m) == [-1] + [0] * (r - 1):
        return f"E{c.m.index(-1) + 1}"
    if c.d == 1 and sorted(c.m) == [0] * (r - 2) + [1, 1]:
        i, j = (k + 1 for k, x in enumerate(c.m) if x == 1)
        return f"l{i}{j}"
    if c.d == 2 and all(x == 1 for x in c.m):
        return "C"
    return repr(c)


class IntersectionGraph:
    """Vertices with the full pairing matrix as labelled adjacency."""

    def __init__(self, vertices: Sequence[PicClass]):
        self.vertices = list(vertices)
        self.adjacency = [[a.dot(b) for b in self.vertices] for a in self.vertices]

    def __len__(self):
        return len(self.vertices)

    @classmethod
    def from_matrix(cls, adjacency: Sequence[Sequence[int]]) -> IntersectionGraph:
        g = cls.__new__(cls)
        g.vertices = list(range(len(adjacency)))
        g.adjacency = [list(row) for row in adjacency]
        n = len(adjacency)
        if any(len(row) != n for row in adjacency):
            raise ValueError("adjacency must be square")
        if any(g.adjacency[i][j] != g.adjacency[j][i] for i in range(n) for j in range(n)):
            raise ValueError("adjacency must be symmetric")
        return g

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(len(self)) if j != i and self.adjacency[i][j]]

    def invariant(self, i: int) -> tuple:
        """Vertex fingerprint preserved by automorphisms."""
        row = self.adjacency[i]
        others = sorted(row[j] for j in range(len(row)) if j != i)
        return (row[i], tuple(others))


def graph_automorphisms(g: IntersectionGraph) -> FiniteGroup:
    """All vertex permutations preserving the weighted adjacency matrix."""
    n = len(g)
    if n > MAX_GRAPH_VERTICES:
        raise ValueError(f"at most {MAX_GRAPH_VERTICES} vertices supported, got {n}")
    adj = g.adjacency
    inv = [g.invariant(i) for i in range(n)]
    image = [-1] * n
    used = [False] * n
    found: list[Perm] = []

    def rec(i: int):
        if i == n:
            found.append(Perm(tuple(image)))
            return
        for j in range(n):
            if used[j] or inv[j] != inv[i]:
                continue
            if any(adj[i][k] != adj[j][image[k]] for k in range(i)):
                continue
            image[i], used[j] = j, True
            rec(i + 1)
            image[i], used[j] = -1, False

    rec(0)
    ident = Perm.identity(n)
    others = [p for p in found if p != ident]
    G = FiniteGroup([ident] + others, others, ident)
    return G


def action_on_quadruples(perm: Perm, vertices: Sequence, quads: Sequence[frozenset]) -> Perm:
    """Permutation of the quadruples induced by a vertex permutation."""
    pos = {v: i for i, v in enumerate(vertices)}
    index = {q: i for i, q in enumerate(quads)}
    images = []
    for q in quads:
        moved = frozenset(vertices[perm(pos[v])] for v in q)
        if moved not in index:
            raise ValueError("permutation does not preserve the set of quadruples")
        images.append(index[moved])
    return Perm(tuple(images))


def dp5_automorphisms() -> tuple[FiniteGroup, list[PicClass], list[frozenset]]:
    classes = enumerate_minus_one(4)
    return graph_automorphisms(IntersectionGraph(classes)), classes, skew_quadruples(4)


def sym5_image(G: FiniteGroup, vertices: Sequence, quads: Sequence[frozenset]) -> FiniteGroup:
    images = [action_on_quadruples(p, vertices, quads) for p in G.generators]
    return closure(images, identity=Perm.identity(len(quads)))
