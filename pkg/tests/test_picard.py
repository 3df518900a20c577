from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cremonaq.groupkit import Perm
from cremonaq.picard import (
    IntersectionGraph,
    PicClass,
    action_on_quadruples,
    canonical_class,
    class_label,
    conic_through,
    dp5_automorphisms,
    enumerate_minus_one,
    exceptional,
    exceptional_pairs,
    graph_automorphisms,
    line_class,
    line_through,
    skew_quadruples,
    sym5_image,
)


def cremona_orbit(r: int) -> set[PicClass]:
    """Orbit of E_1 under point permutations and the quadratic map at points 1, 2, 3."""

    def quadratic(c: PicClass) -> PicClass:
        d, m = c.d, c.m
        new_d = 2 * d - m[0] - m[1] - m[2]
        head = (d - m[1] - m[2], d - m[0] - m[2], d - m[0] - m[1])
        return PicClass(new_d, head + m[3:])

    def swaps(c: PicClass):
        for i in range(r - 1):
            m = list(c.m)
            m[i], m[i + 1] = m[i + 1], m[i]
            yield PicClass(c.d, tuple(m))

    start = exceptional(1, r)
    seen, frontier = {start}, [start]
    while frontier:
        nxt = []
        for c in frontier:
            for n in [quadratic(c), *swaps(c)] if r >= 3 else list(swaps(c)):
                if n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
    return seen


def test_basic_intersections():
    r = 5
    E1, L, K = exceptional(1, r), line_class(r), canonical_class(r)
    assert E1.square() == -1 and E1.dot(K) == -1
    assert L.square() == 1 and K.square() == 9 - r
    assert line_through(1, 2, r).dot(E1) == 1
    assert line_through(1, 2, r).square() == -1
    assert conic_through(range(1, 6), r).square() == -1
    with pytest.raises(ValueError):
        exceptional(6, r)
    with pytest.raises(ValueError):
        line_through(2, 2, r)


@pytest.mark.parametrize("r,count", [(1, 1), (2, 3), (3, 6), (4, 10), (5, 16), (6, 27), (7, 56), (8, 240)])
def test_minus_one_counts_match_root_system_values(r, count):
    assert len(enumerate_minus_one(r)) == count


@pytest.mark.parametrize("r", range(1, 9))
def test_minus_one_classes_have_the_right_pairings(r):
    K = canonical_class(r)
    for c in enumerate_minus_one(r):
        assert c.square() == -1 and c.dot(K) == -1


@pytest.mark.parametrize("r", [3, 4, 5, 6, 7])
def test_minus_one_classes_match_cremona_orbit(r):
    assert set(enumerate_minus_one(r)) == cremona_orbit(r)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_search_box_is_large_enough(r):
    assert enumerate_minus_one(r) == enumerate_minus_one(r, (0, 9, -2, 5))


def test_enumeration_rejects_bad_r():
    with pytest.raises(ValueError):
        enumerate_minus_one(9)


def test_exceptional_pairs():
    pairs = exceptional_pairs()
    assert len(pairs) == 5
    K = canonical_class(5)
    for A, B in pairs:
        assert A + B == -K
        assert A.square() == B.square() == 0
        assert A.dot(K) == B.dot(K) == -2
        assert A.d == 1 and B.d == 2
    assert exceptional_pairs(degree_bound=6) == pairs


def test_skew_quadruples_and_labels():
    quads = skew_quadruples(4)
    assert len(quads) == 5
    labels = sorted(sorted(class_label(c) for c in q) for q in quads)
    assert ["E1", "E2", "E3", "E4"] in labels
    assert ["E1", "l23", "l24", "l34"] in labels
    assert class_label(conic_through(range(1, 6), 5)) == "C"
    assert class_label(PicClass(3, (2, 1, 1, 1, 1, 1, 1))) == "(3; 2, 1, 1, 1, 1, 1, 1)"


def test_graph_automorphisms_of_small_graphs():
    K4 = IntersectionGraph.from_matrix([[0 if i == j else 1 for j in range(4)] for i in range(4)])
    assert len(graph_automorphisms(K4)) == 24
    empty = IntersectionGraph.from_matrix([[0] * 3 for _ in range(3)])
    assert len(graph_automorphisms(empty)) == 6
    path = IntersectionGraph.from_matrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert len(graph_automorphisms(path)) == 2
    big = IntersectionGraph.from_matrix([[0] * 17 for _ in range(17)])
    with pytest.raises(ValueError):
        graph_automorphisms(big)
    with pytest.raises(ValueError):
        IntersectionGraph.from_matrix([[0, 1], [0, 0]])


def test_dp5_group_and_sym5_image():
    G, classes, quads = dp5_automorphisms()
    assert len(classes) == 10 and len(G) == 120
    H = sym5_image(G, classes, quads)
    assert len(H) == 120
    elems = set(G)
    assert all(p * q in elems for p in G for q in G)
    assert all(p.inverse() in elems for p in G)


def _point_swap(classes, i, j):
    def swap_class(c):
        m = list(c.m)
        m[i], m[j] = m[j], m[i]
        return PicClass(c.d, tuple(m))

    pos = {c: k for k, c in enumerate(classes)}
    return Perm(tuple(pos[swap_class(c)] for c in classes))


def test_swapping_two_points_acts_as_a_transposition_on_quadruples():
    G, classes, quads = dp5_automorphisms()
    for i, j in combinations(range(4), 2):
        p = _point_swap(classes, i, j)
        assert p in G
        assert action_on_quadruples(p, classes, quads).cycle_type() == (2, 1, 1, 1)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_action_on_quadruples_is_a_homomorphism(data):
    G, classes, quads = dp5_automorphisms()
    p = data.draw(st.sampled_from(G.elements))
    q = data.draw(st.sampled_from(G.elements))
    lhs = action_on_quadruples(p * q, classes, quads)
    assert lhs == action_on_quadruples(p, classes, quads) * action_on_quadruples(q, classes, quads)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_graph_automorphisms_preserve_the_pairing(data):
    G, classes, _ = dp5_automorphisms()
    p = data.draw(st.sampled_from(G.elements))
    for a, b in combinations(range(len(classes)), 2):
        assert classes[a].dot(classes[b]) == classes[p(a)].dot(classes[p(b)])
