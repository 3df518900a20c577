"""Finite groups generated by explicit elements.

Elements only need ``__mul__``, ``__eq__`` and ``__hash__`` that respect the
group law (projective maps hash by canonical representative, for example).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from math import lcm
from typing import Callable, Hashable, Iterable, Mapping, Sequence

DEFAULT_CLOSURE_CAP = 100_000


class CapExceeded(RuntimeError):
    """Closure grew past the cap: the group is infinite or the cap is too small."""


@dataclass(eq=False)
class FiniteGroup:
    elements: list
    generators: list
    identity: Hashable
    mul: Callable = field(default=lambda a, b: a * b, repr=False)

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._index

    def index(self, g) -> int:
        return self._index[g]

    def element_order(self, g) -> int:
        k, p = 1, g
        while p != self.identity:
            p = self.mul(p, g)
            k += 1
            if k > len(self.elements):
                raise ValueError("element does not have finite order in this group")
        return k

    def inverse(self, g):
        k = self.element_order(g)
        p = self.identity
        for _ in range(k - 1):
            p = self.mul(p, g)
        return p

    def power(self, g, k: int):
        if k < 0:
            g, k = self.inverse(g), -k
        p = self.identity
        for _ in range(k):
            p = self.mul(p, g)
        return p

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def commutes_with_all(self, g) -> bool:
        gens = self.generators or self.elements
        return all(self.mul(g, s) == self.mul(s, g) for s in gens)


def closure(generators: Sequence, cap: int = DEFAULT_CLOSURE_CAP, identity=None,
            mul: Callable = lambda a, b: a * b) -> FiniteGroup:
    """Breadth-first closure of the generators under right multiplication."""
    if cap < 1:
        raise ValueError("cap must be positive")
    gens = list(generators)
    if not gens:
        if identity is None:
            raise ValueError("identity required for an empty generating set")
        return FiniteGroup([identity], [], identity, mul)
    seen = {}
    order = []
    frontier = []
    start = [identity] if identity is not None else []
    for g in start + gens:
        if g not in seen:
            seen[g] = len(order)
            order.append(g)
            frontier.append(g)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s)
                if h not in seen:
                    if len(order) >= cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
                    seen[h] = len(order)
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
    if identity is None:
        g0 = gens[0]
        identity = next(e for e in order if mul(e, g0) == g0)
        order.remove(identity)
        order.insert(0, identity)
    return FiniteGroup(order, gens, identity, mul)


def subgroup(G: FiniteGroup, generators: Sequence) -> FiniteGroup:
    return closure(generators, cap=len(G), identity=G.identity, mul=G.mul)


def order_histogram(G: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(G.element_order(g) for g in G).items()))


def center(G: FiniteGroup) -> FiniteGroup:
    """Elements commuting with every generator (hence with all of G)."""
    z = [g for g in G if G.commutes_with_all(g)]
    return FiniteGroup(z, z, G.identity, G.mul)


def is_normal(G: FiniteGroup, N: FiniteGroup) -> bool:
    members = set(N.elements)
    for s in G.generators:
        s_inv = G.inverse(s)
        for n in N.generators or N.elements:
            if G.mul(G.mul(s, n), s_inv) not in members:
                return False
    return True


def exponent(G: FiniteGroup) -> int:
    return lcm(*(G.element_order(g) for g in G))


def structure_check(G: FiniteGroup, N: FiniteGroup) -> dict:
    """Evidence for G = N . Q: |G|, |N|, |Q|, normality, abelianness and exponent of N."""
    return {
        "order": len(G),
        "normal": is_normal(G, N),
        "abelian": N.is_abelian(),
        "subgroup_order": len(N),
        "subgroup_exponent": exponent(N),
        "quotient_order": len(G) // len(N),
    }


# -- words and presentations ---------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z])|(\()|(\))|\^(-?\d+))")


def _parse_word(word: str):
    """Parse e.g. 'a^6', '(ba)^2', 'baBa' into nested (symbol|list, exponent) items.

    Upper case letters are inverses of the corresponding lower case generator
    when only the lower case one is defined.
    """
    stack: list[list] = [[]]
    pos = 0
    while pos < len(word):
        m = _TOKEN.match(word, pos)
        if not m:
            raise ValueError(f"cannot parse relation {word!r} at {pos}")
        pos = m.end()
        sym, lp, rp, exp = m.groups()
        if sym:
            stack[-1].append([sym, 1])
        elif lp:
            stack.append([])
        elif rp:
            if len(stack) == 1:
                raise ValueError(f"unbalanced parentheses in {word!r}")
            group = stack.pop()
            stack[-1].append([group, 1])
        else:
            if not stack[-1]:
                raise ValueError(f"exponent without base in {word!r}")
            stack[-1][-1][1] *= int(exp)
    if len(stack) != 1:
        raise ValueError(f"unbalanced parentheses in {word!r}")
    return stack[0]


def evaluate_word(word: str, generators: Mapping[str, object], G: FiniteGroup):
    def ev(items):
        acc = G.identity
        for base, k in items:
            if isinstance(base, list):
                x = ev(base)
            elif base in generators:
                x = generators[base]
            elif base.swapcase() in generators:
                x = G.inverse(generators[base.swapcase()])
            else:
                raise KeyError(f"unknown generator {base!r}")
            acc = G.mul(acc, G.power(x, k))
        return acc

    return ev(_parse_word(word))


def verify_presentation(generators: Mapping[str, object], relations: Iterable[str], expected_order: int,
                        cap: int = DEFAULT_CLOSURE_CAP, identity=None) -> bool:
    """Relations hold and the generated group has the expected order."""
    G = closure(list(generators.values()), cap=cap, identity=identity)
    if not all(evaluate_word(r, generators, G) == G.identity for r in relations):
        return False
    return len(G) == expected_order


# -- concrete element types -------------------------------------------------------------

@dataclass(frozen=True)
class Perm:
    """Permutation of range(n); (p * q)(i) = p(q(i))."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Perm:
        img = list(range(n))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                img[a] = b
        return cls(tuple(img))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def cycle_type(self) -> tuple:
        seen, lengths = set(), []
        for i in range(len(self.images)):
            if i in seen:
                continue
            k, j = 0, i
            while j not in seen:
                seen.add(j)
                j = self.images[j]
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))

    def __repr__(self):
        cycles, seen = [], set()
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j + 1)
                j = self.images[j]
            cycles.append("(" + " ".join(map(str, c)) + ")")
        return "".join(cycles) or "()"


def symmetric_group(n: int) -> list[Perm]:
    return [Perm(p) for p in permutations(range(n))]


@dataclass(frozen=True)
class PermVectorElement:
    """(v, sigma) in F_2^5 x| Sym_5 with (v, s)(w, t) = (v + s(w), s t)."""

    vector: tuple
    perm: Perm

    def __post_init__(self):
        if sum(self.vector) % 2:
            raise ValueError("vector must have even weight")

    def __mul__(self, other: PermVectorElement) -> PermVectorElement:
        moved = [0] * len(other.vector)
        for i, x in enumerate(other.vector):
            moved[self.perm(i)] = x
        v = tuple((a + b) % 2 for a, b in zip(self.vector, moved))
        return PermVectorElement(v, self.perm * other.perm)


@dataclass(frozen=True)
class PairSwapElement:
    """(A, B, e) acting on P^1 x P^1: A, B on the factors, e swaps them."""

    first: object
    second: object
    swap: int

    def __mul__(self, other: PairSwapElement) -> PairSwapElement:
        if self.swap:
            return PairSwapElement(self.first * other.second, self.second * other.first, (1 + other.swap) % 2)
        return PairSwapElement(self.first * other.first, self.second * other.second, other.swap)


def product_with_swap(G: FiniteGroup, with_swap: bool = True, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """(G x G) x| Z/2, or just G x G when ``with_swap`` is false."""
    e = G.identity
    gens = [PairSwapElement(g, e, 0) for g in G.generators]
    gens += [PairSwapElement(e, g, 0) for g in G.generators]
    if with_swap:
        gens.append(PairSwapElement(e, e, 1))
    return closure(gens, cap=cap, identity=PairSwapElement(e, e, 0))
