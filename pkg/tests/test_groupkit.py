import random

import pytest
from hypothesis import given, settings, strategies as st

from cremonaq.groupkit import (
    CapExceeded,
    FiniteGroup,
    PairSwapElement,
    Perm,
    PermVectorElement,
    center,
    closure,
    evaluate_word,
    exponent,
    is_normal,
    order_histogram,
    product_with_swap,
    structure_check,
    subgroup,
    symmetric_group,
    verify_presentation,
)
from cremonaq.projlin import ProjMap, as_matrix
from cremonaq.verifier.checks import d6_group, signed_perm3_group, pgl4_order9_group

perms5 = st.permutations(range(5)).map(Perm)


def d6_gens():
    return ProjMap(as_matrix([[2, -1], [1, 1]])), ProjMap(as_matrix([[0, 1], [1, 0]]))


def assert_closed(G: FiniteGroup, samples: int = 300, seed: int = 0):
    # Latin-square property on random pairs, plus inverses
    rng = random.Random(seed)
    elems = G.elements
    for _ in range(samples):
        a, b = rng.choice(elems), rng.choice(elems)
        assert G.mul(a, b) in G
        assert G.mul(a, G.inverse(a)) == G.identity
    row = {G.mul(elems[0], b) for b in elems}
    assert len(row) == len(G)


# -- closure -------------------------------------------------------------------------

def test_symmetric_group_from_two_generators():
    G = closure([Perm((1, 0, 2, 3, 4)), Perm((1, 2, 3, 4, 0))], identity=Perm.identity(5))
    assert len(G) == 120
    assert set(G) == set(symmetric_group(5))
    assert_closed(G)


def test_closure_does_not_depend_on_generator_order():
    a, b = d6_gens()
    G1 = closure([a, b], identity=ProjMap.identity(2))
    G2 = closure([b, a, a * b], identity=ProjMap.identity(2))
    assert set(G1) == set(G2)
    assert len(G1) == 12


def test_closure_finds_identity_when_not_given():
    G = closure([Perm((1, 2, 0))])
    assert G.identity == Perm.identity(3)
    assert G.elements[0] == G.identity
    assert len(G) == 3


def test_empty_generating_set():
    G = closure([], identity=Perm.identity(3))
    assert len(G) == 1
    with pytest.raises(ValueError):
        closure([])


def test_cap_exceeded_for_infinite_group():
    with pytest.raises(CapExceeded):
        closure([ProjMap(as_matrix([[1, 1], [0, 1]]))], cap=100, identity=ProjMap.identity(2))
    with pytest.raises(ValueError):
        closure([Perm((1, 0))], cap=0)


@settings(max_examples=30, deadline=None)
@given(st.lists(perms5, min_size=1, max_size=3))
def test_generated_permutation_groups_are_closed(gens):
    G = closure(gens, identity=Perm.identity(5))
    assert 120 % len(G) == 0
    for g in gens:
        assert g in G
    assert_closed(G, samples=50)


# -- invariants -------------------------------------------------------------------------

def test_d6_histogram_and_center():
    G = d6_group()
    assert order_histogram(G) == {1: 1, 2: 7, 3: 2, 6: 2}
    assert len(center(G)) == 2
    assert exponent(G) == 6


def test_signed_perm3_and_pgl4_groups():
    assert len(signed_perm3_group()) == 24
    G = pgl4_order9_group()
    assert len(G) == 9
    assert G.is_abelian()
    assert order_histogram(G) == {1: 1, 3: 8}


def test_pgl2_finite_groups_have_order_at_most_twelve():
    gens = [ProjMap(as_matrix(m)) for m in (
        [[2, -1], [1, 1]], [[0, 1], [1, 0]], [[0, -1], [1, 0]], [[0, -1], [1, -1]], [[1, 0], [0, -1]],
    )]
    ident = ProjMap.identity(2)
    for i in range(len(gens)):
        for j in range(i, len(gens)):
            try:
                G = closure([gens[i], gens[j]], cap=200, identity=ident)
            except CapExceeded:
                continue
            assert len(G) <= 12
            assert set(order_histogram(G)) <= {1, 2, 3, 4, 6}


def test_normality_and_structure():
    S4 = closure([Perm((1, 0, 2, 3)), Perm((1, 2, 3, 0))], identity=Perm.identity(4))
    V4 = subgroup(S4, [Perm((1, 0, 3, 2)), Perm((2, 3, 0, 1))])
    C2 = subgroup(S4, [Perm((1, 0, 2, 3))])
    assert is_normal(S4, V4)
    assert not is_normal(S4, C2)
    info = structure_check(S4, V4)
    assert info == {"order": 24, "normal": True, "abelian": True, "subgroup_order": 4,
                    "subgroup_exponent": 2, "quotient_order": 6}
    assert len(center(S4)) == 1


# -- presentations ------------------------------------------------------------------------

def test_d6_presentation():
    a, b = d6_gens()
    gens = {"a": a, "b": b}
    assert verify_presentation(gens, ["a^6", "b^2", "(ba)^2"], 12, identity=ProjMap.identity(2))
    assert not verify_presentation(gens, ["a^6", "b^2", "(ba)^2"], 24, identity=ProjMap.identity(2))
    assert not verify_presentation(gens, ["a^3"], 12, identity=ProjMap.identity(2))


@settings(max_examples=30, deadline=None)
@given(perms5, perms5)
def test_presentation_holds_with_its_true_orders(a, b):
    # relations that hold by construction always verify at the closure's order
    G = closure([a, b], identity=Perm.identity(5))
    k, m, j = G.element_order(a), G.element_order(b), G.element_order(b * a)
    assert verify_presentation({"a": a, "b": b}, [f"a^{k}", f"b^{m}", f"(ba)^{j}"], len(G),
                               identity=Perm.identity(5))


def test_word_evaluation_with_inverses():
    G = closure([Perm((1, 2, 0))], identity=Perm.identity(3))
    r = Perm((1, 2, 0))
    assert evaluate_word("R", {"r": r}, G) == r.inverse()
    assert evaluate_word("r^-1", {"r": r}, G) == r.inverse()
    assert evaluate_word("(rr)^3", {"r": r}, G) == G.identity
    with pytest.raises(KeyError):
        evaluate_word("s", {"r": r}, G)
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        evaluate_word("(r", {"r": r}, G)


# -- concrete elements ----------------------------------------------------------------------

def test_perm_basics():
    p = Perm.from_cycles(5, (0, 1, 2), (3, 4))
    assert p.cycle_type() == (3, 2)
    assert p * p.inverse() == Perm.identity(5)
    q = Perm((1, 0, 2, 3, 4))
    assert (p * q)(0) == p(q(0))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=5, max_size=5), perms5,
       st.lists(st.integers(0, 1), min_size=5, max_size=5), perms5)
def test_perm_vector_law_matches_action(v, s, w, t):
    # (v, s) acts on F_2^5 x range(5)-labelled signs by x -> v + s(x)
    if sum(v) % 2 or sum(w) % 2:
        with pytest.raises(ValueError):
            PermVectorElement(tuple(v), s) if sum(v) % 2 else PermVectorElement(tuple(w), t)
        return

    def act(g, x):
        moved = [0] * 5
        for i, xi in enumerate(x):
            moved[g.perm(i)] = xi
        return tuple((a + b) % 2 for a, b in zip(g.vector, moved))

    g, h = PermVectorElement(tuple(v), s), PermVectorElement(tuple(w), t)
    for x in [(1, 0, 0, 0, 0), (0, 1, 1, 0, 1), (0, 0, 0, 0, 0)]:
        assert act(g * h, x) == act(g, act(h, x))


@settings(max_examples=50, deadline=None)
@given(perms5, perms5, st.integers(0, 1), perms5, perms5, st.integers(0, 1))
def test_pair_swap_law_matches_action_on_pairs(a, b, e, c, d, f):
    def act(g, pq):
        p, q = pq
        return (g.first(q), g.second(p)) if g.swap else (g.first(p), g.second(q))

    u, v = PairSwapElement(a, b, e), PairSwapElement(c, d, f)
    for pq in [(0, 1), (3, 2), (4, 4)]:
        assert act(u * v, pq) == act(u, act(v, pq))


def test_product_with_swap_orders():
    G = d6_group()
    assert len(product_with_swap(G)) == 288
    assert len(product_with_swap(G, with_swap=False)) == 144
    trivial = closure([], identity=Perm.identity(2))
    assert len(product_with_swap(trivial)) == 2
