"""Registry of named verification checks, grouped into suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable

from ..exactalg import cubic_discriminant, MultiPoly, rational_cube_root, sextic_reducibility_criterion
from ..groupkit import (
    Perm,
    center,
    closure,
    exponent,
    is_normal,
    order_histogram,
    product_with_swap,
    subgroup,
    verify_presentation,
)
from ..picard import (
    IntersectionGraph,
    class_label,
    dp5_automorphisms,
    enumerate_minus_one,
    exceptional_pairs,
    graph_automorphisms,
    line_through,
    skew_quadruples,
    sym5_image,
)
from ..projlin import (
    ProjMap,
    as_matrix,
    canonical_order3_pgl2,
    companion3,
    companion_order3_pgl3,
    coprime_root,
    det,
    lift_form_preserving,
    lift_to_sl,
    mat_inverse,
    mat_mul,
    minkowski_bound,
    minkowski_exponent,
    proj_order,
    S_ORDER3,
)
from ..delpezzo.geometry import (
    curves_disjoint,
    curve_residuals,
    dp1_stabilizer_check,
    form_invariant_under,
    general_position,
    preserves_surface,
    realizable_point_permutations,
    surface_contains_curve,
    weighted_aut_group,
)
from ..delpezzo.hexagon import (
    HexAut,
    build_hexagon_group,
    classify_hex,
    d6_elements,
    galois_twist,
    semilinear_commutes,
    torus_centralizer,
    torus_subgroup,
    units,
)
from ..delpezzo.models import (
    build_named_model,
    d5_perms,
    dp1_example,
    vector_perm_group,
)

PASS, FAIL, ERRATUM = "pass", "fail", "erratum-note"

SUITES = ("minkowski", "pgl3", "lattice", "conic", "dp1", "dp2", "dp3", "dp4", "dp5", "dp6", "dp7", "dp8", "dp9")


@dataclass(frozen=True)
class Context:
    seed: int = 1
    cap: int = 100_000

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    paper_ref: str
    expected: Any
    compute: Callable[[Context], Any]
    erratum: bool = False


@dataclass(frozen=True)
class TableRow:
    surface: str
    structure: str
    order: int
    check_id: str


TABLE = (
    TableRow("conic bundles", "D6×D6", 144, "conic.order144"),
    TableRow("dP9", "(Z/2Z)²⋊Sym3", 24, "dp9.order24"),
    TableRow("dP8", "(D6×D6)⋊Z/2Z", 288, "dp8.order288"),
    TableRow("dP6", "(Z/6Z)²⋊D₆", 432, "dp6.order432"),
    TableRow("dP5", "Sym5", 120, "dp5.order120"),
    TableRow("dP4", "(Z/2Z)⁴⋊Sym3", 96, "dp4.order96"),
    TableRow("dP3", "Sym5", 120, "dp3.order120"),
    TableRow("dP2", "(Z/2Z)³⋊Sym3", 48, "dp2.order48"),
    TableRow("dP1", "D6", 12, "dp1.order12"),
)

REGISTRY: list[Check] = []


def check(id: str, paper_ref: str, expected, erratum: bool = False):
    def deco(fn):
        REGISTRY.append(Check(id, id.split(".")[0], paper_ref, expected, fn, erratum))
        return fn
    return deco


def _m(rows):
    return as_matrix(rows)


def _rand_rational(rng: random.Random, lo: int = -10, hi: int = 10, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, 5))
        if q or not nonzero:
            return q


def _rand_invertible(rng: random.Random, n: int):
    while True:
        g = _m([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        try:
            return g, mat_inverse(g)
        except ValueError:
            continue


# -- shared constructions ----------------------------------------------------------

D6_A = _m([[2, -1], [1, 1]])
D6_B = _m([[0, 1], [1, 0]])
SIGNED_PERM3 = {
    "rho": _m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
    "sigma": _m([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
    "tau": _m([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
}
PGL4_A = _m([[0, -1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
PGL4_B = _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]])


def d6_group(cap: int = 100_000):
    return closure([ProjMap(D6_A), ProjMap(D6_B)], cap=cap, identity=ProjMap.identity(2))


def signed_perm3_group(cap: int = 100_000):
    return closure([ProjMap(m) for m in SIGNED_PERM3.values()], cap=cap, identity=ProjMap.identity(3))


def pgl4_order9_group(cap: int = 100_000):
    return closure([ProjMap(PGL4_A), ProjMap(PGL4_B)], cap=cap, identity=ProjMap.identity(4))


def random_general_configs(rng: random.Random, count: int, bound: int = 20) -> list[list[tuple]]:
    """Five-point configurations A1..A4 = frame, A5 random, in general position."""
    frame = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    out = []
    while len(out) < count:
        p5 = tuple(rng.randint(-bound, bound) for _ in range(3))
        pts = [tuple(Fraction(x) for x in p) for p in frame + [p5]]
        if any(p5) and general_position(pts):
            out.append(pts)
    return out


def is_double_transposition(p: Perm) -> bool:
    return p.cycle_type() == (2, 2, 1)


# -- minkowski ------------------------------------------------------------------------

@check("minkowski.M3", "bound for finite subgroups of GL3(Q)", 48)
def _(ctx):
    return minkowski_bound(3)


@check("minkowski.M4", "bound for finite subgroups of GL4(Q)", 5760)
def _(ctx):
    return minkowski_bound(4)


@check("minkowski.M2", "bound for finite subgroups of GL2(Q)", 24)
def _(ctx):
    return minkowski_bound(2)


@check("minkowski.exponents", "p-adic exponents M(3,2), M(3,3), M(4,2), M(4,3), M(4,5)", [4, 1, 7, 2, 1])
def _(ctx):
    return [minkowski_exponent(3, 2), minkowski_exponent(3, 3), minkowski_exponent(4, 2),
            minkowski_exponent(4, 3), minkowski_exponent(4, 5)]


@check("minkowski.M4_factored", "M(4) = 2^7 * 3^2 * 5", True)
def _(ctx):
    return minkowski_bound(4) == 2 ** 7 * 3 ** 2 * 5


# -- pgl3: element orders, lifts, normal forms -------------------------------------

@check("pgl3.d6_orders", "orders of the two PGL2 generators", [6, 2])
def _(ctx):
    return [proj_order(ProjMap(D6_A)), proj_order(ProjMap(D6_B))]


@check("pgl3.signed_perm3_orders", "orders of the sign change, swap and 3-cycle", [2, 2, 3])
def _(ctx):
    return [proj_order(ProjMap(m)) for m in SIGNED_PERM3.values()]


@check("pgl3.pgl4_order9_group", "order and abelianness of the (Z/3Z)^2 subgroup of PGL4(Q)", [9, True])
def _(ctx):
    G = pgl4_order9_group(ctx.cap)
    return [len(G), G.is_abelian()]


@check("pgl3.pgl4_order9_histogram", "element orders of the (Z/3Z)^2 subgroup", {1: 1, 3: 8})
def _(ctx):
    return order_histogram(pgl4_order9_group(ctx.cap))


@check("pgl3.pgl4_order9_presentation", "presentation a^3 = b^3 = [a, b] = 1", True)
def _(ctx):
    return verify_presentation({"a": ProjMap(PGL4_A), "b": ProjMap(PGL4_B)}, ["a^3", "b^3", "abAB"], 9,
                               identity=ProjMap.identity(4))


@check("pgl3.prime_orders", "orders in constructed PGL3(Q) groups have no prime factor above 3", True)
def _(ctx):
    G = signed_perm3_group(ctx.cap)
    orders = {G.element_order(g) for g in G}
    return all(all(p in (2, 3) for p in _prime_factors(k)) for k in orders)


def _prime_factors(k: int) -> set[int]:
    out, p = set(), 2
    while k > 1:
        while k % p == 0:
            out.add(p)
            k //= p
        p += 1
    return out


@check("pgl3.companion_explicit", "explicit conjugator for the block-diagonal order-3 case", [[-1, -1, -1], [-3, 3, 0], [-3, 0, 3]])
def _(ctx):
    A = _m([[1, 0, 0], [0, 0, -1], [0, 1, -1]])
    B, M = companion_order3_pgl3(ProjMap(A))
    return [[int(x) for x in row] for row in M]


@check("pgl3.companion_random", "order-3 classes of PGL3(Q) conjugate to a companion matrix (200 samples)", 200)
def _(ctx):
    rng = ctx.rng("companion")
    ok = 0
    for _ in range(200):
        lam = _rand_rational(rng, nonzero=True)
        g, g_inv = _rand_invertible(rng, 3)
        A = mat_mul(mat_mul(g, companion3(lam)), g_inv)
        B, M = companion_order3_pgl3(ProjMap(A), seed=ctx.seed)
        scale = rng.choice([1, 2, -3, Fraction(1, 7)])
        A_scaled = tuple(tuple(x * scale for x in row) for row in A)
        B2, M2 = companion_order3_pgl3(ProjMap(A_scaled), seed=ctx.seed)
        good = all(mat_mul(mat_inverse(MM), mat_mul(AA, MM)) == BB
                   for AA, BB, MM in ((A, B, M), (A_scaled, B2, M2)))
        ok += good and B[0][2] == lam
    return ok


@check("pgl3.order3_pgl2", "order-3 classes of PGL2(Q) conjugate to S or S^-1 (200 samples)", 200)
def _(ctx):
    rng = ctx.rng("pgl2")
    ok = 0
    S_inv = mat_inverse(S_ORDER3)
    for i in range(200):
        g, g_inv = _rand_invertible(rng, 2)
        base = S_ORDER3 if i % 2 == 0 else S_inv
        scale = _rand_rational(rng, nonzero=True)
        A = tuple(tuple(x * scale for x in row) for row in mat_mul(mat_mul(g, base), g_inv))
        which, M = canonical_order3_pgl2(ProjMap(A))
        L = lift_to_sl(ProjMap(A), 3)
        if which == "inverse":
            L = mat_inverse(L)
        ok += mat_mul(mat_inverse(M), mat_mul(L, M)) == S_ORDER3
    return ok


@check("pgl3.discriminant", "discriminant of t^3 - 2t^2 - 1", -59)
def _(ctx):
    (t,) = MultiPoly.gens(("t",))
    return int(cubic_discriminant(t ** 3 - 2 * t ** 2 - 1))


@check("pgl3.sextic_criterion", "sextic reducibility criterion at b = 1, -2, 8", [False, False, False])
def _(ctx):
    return [sextic_reducibility_criterion(b) for b in (1, -2, 8)]


@check("pgl3.roots_roundtrip", "cube roots and coprime roots recover 100 random rationals", 100)
def _(ctx):
    rng = ctx.rng("roots")
    ok = 0
    for _ in range(100):
        c = _rand_rational(rng, -50, 50, nonzero=True)
        m, n = rng.choice([(3, 2), (2, 3), (5, 3), (4, 7)])
        ok += rational_cube_root(c ** 3) == c and coprime_root(c ** n, c ** m, m, n) == c
    return ok


# -- lattice --------------------------------------------------------------------------

@check("lattice.minus_one_counts", "(-1)-classes on blow-ups of 3, 4, 5, 6 points", [6, 10, 16, 27])
def _(ctx):
    return [len(enumerate_minus_one(r)) for r in (3, 4, 5, 6)]


@check("lattice.box_stability", "(-1)-class counts unchanged in a larger search box", [6, 10, 16, 27])
def _(ctx):
    return [len(enumerate_minus_one(r, (0, 9, -2, 5))) for r in (3, 4, 5, 6)]


@check("lattice.exceptional_pairs", "exceptional pairs {L - E_i, 2L - sum_{j != i} E_j}", 5)
def _(ctx):
    pairs = exceptional_pairs(5)
    expected = set()
    for i in range(5):
        A = (1, tuple(1 if k == i else 0 for k in range(5)))
        B = (2, tuple(0 if k == i else 1 for k in range(5)))
        expected.add((A, B))
    got = {((a.d, a.m), (b.d, b.m)) for a, b in pairs}
    return len(pairs) if got == expected else f"mismatch: {sorted(got)}"


@check("lattice.skew_quadruples", "sets of four disjoint (-1)-classes on the blow-up of 4 points", 5)
def _(ctx):
    return len(skew_quadruples(4))


# -- conic bundles and P1 x P1 ---------------------------------------------------------

@check("conic.d6_presentation", "a^6 = b^2 = (ba)^2 = 1 with 12 elements", True)
def _(ctx):
    return verify_presentation({"a": ProjMap(D6_A), "b": ProjMap(D6_B)}, ["a^6", "b^2", "(ba)^2"], 12,
                               cap=ctx.cap, identity=ProjMap.identity(2))


@check("conic.d6_histogram", "element orders of D6 in PGL2(Q)", {1: 1, 2: 7, 3: 2, 6: 2})
def _(ctx):
    return order_histogram(d6_group(ctx.cap))


@check("conic.d6_center", "center of D6", 2)
def _(ctx):
    return len(center(d6_group(ctx.cap)))


@check("conic.order144", "D6 x D6 preserving a ruling of P1 x P1", 144)
def _(ctx):
    return len(product_with_swap(d6_group(ctx.cap), with_swap=False, cap=ctx.cap))


@check("dp8.order288", "(D6 x D6) x| Z/2 acting on P1 x P1", 288)
def _(ctx):
    return len(product_with_swap(d6_group(ctx.cap), with_swap=True, cap=ctx.cap))


@check("dp8.factor_bound", "finite subgroups built in PGL2(Q) have at most 12 elements", True)
def _(ctx):
    G = d6_group(ctx.cap)
    return len(G) <= 12 and set(order_histogram(G)) <= {1, 2, 3, 4, 6}


# -- dP9 = P2 ---------------------------------------------------------------------------

@check("dp9.order24", "group generated by sign changes and coordinate permutations in PGL3(Q)", 24)
def _(ctx):
    return len(signed_perm3_group(ctx.cap))


@check("dp9.structure", "normal (Z/2Z)^2 with quotient of order 6", [True, 4, 2, 6])
def _(ctx):
    G = signed_perm3_group(ctx.cap)
    rho = ProjMap(SIGNED_PERM3["rho"])
    tau = ProjMap(SIGNED_PERM3["tau"])
    N = subgroup(G, [rho, tau * rho * tau.inverse()])
    return [is_normal(G, N) and N.is_abelian(), len(N), exponent(N), len(G) // len(N)]


@check("dp9.minkowski_cap", "order divides the Minkowski bound M(3)", True)
def _(ctx):
    return minkowski_bound(3) % len(signed_perm3_group(ctx.cap)) == 0


# -- dP7 ---------------------------------------------------------------------------------

@check("dp7.graph", "(-1)-curves of the blow-up of two points form a path fixed at l12", [3, 2, True])
def _(ctx):
    classes = enumerate_minus_one(2)
    g = IntersectionGraph(classes)
    G = graph_automorphisms(g)
    mid = classes.index(line_through(1, 2, 2))
    edges = sum(1 for i, j in combinations(range(len(classes)), 2) if g.adjacency[i][j])
    return [len(classes), len(G), all(p(mid) == mid for p in G) and edges == 2]


# -- dP6 ---------------------------------------------------------------------------------

@check("dp6.order432", "closure of the hexagon symmetries and the torus mu_6^2", 432)
def _(ctx):
    return len(build_hexagon_group())


@check("dp6.structure", "normal torus (Z/6Z)^2 of exponent 6 with quotient of order 12", [True, 36, 6, 12])
def _(ctx):
    G = build_hexagon_group()
    T = torus_subgroup(G)
    return [is_normal(G, T) and T.is_abelian(), len(T), exponent(T), len(G) // len(T)]


@check("dp6.galois_commute", "every element commutes with the Galois twist", True)
def _(ctx):
    tw = galois_twist(6)
    return all(semilinear_commutes(g, tw) for g in build_hexagon_group())


@check("dp6.centralizer_n6", "torus elements commuting with the twist at n = 6", 36)
def _(ctx):
    return torus_centralizer(6, galois_twist(6)).count


@check("dp6.centralizer_n18", "torus centralizer at n = 18 for transpositions and 3-cycles, any twist", True)
def _(ctx):
    ok = True
    for k in units(18):
        for p, e in d6_elements():
            if classify_hex(p, e).startswith("identity"):
                continue
            ok = ok and torus_centralizer(18, HexAut(18, (0, 0), p, e, k)).count <= 18
    return ok


# -- dP5 ---------------------------------------------------------------------------------

@check("dp5.order120", "automorphisms of the intersection graph of the ten (-1)-classes", 120)
def _(ctx):
    G, _, _ = dp5_automorphisms()
    return len(G)


@check("dp5.sym5_action", "action on the five skew quadruples is faithful onto Sym5", [5, 120])
def _(ctx):
    G, classes, quads = dp5_automorphisms()
    return [len(quads), len(sym5_image(G, classes, quads))]


@check("dp5.quadruple_list", "claimed skew quadruple containing E4", "{E4,l23,l13,l23}", erratum=True)
def _(ctx):
    quads = skew_quadruples(4)
    # the quadruple whose only exceptional divisor is E4
    q = next(q for q in quads if sorted(class_label(c) for c in q if c.d == 0) == ["E4"])
    return "{" + ",".join(sorted(class_label(c) for c in q)) + "}"


# -- dP4 ---------------------------------------------------------------------------------

@check("dp4.order96", "even-weight F2^5 extended by the realizable permutations over Q(omega)", 96)
def _(ctx):
    return len(build_named_model("omega_config_group").group())


@check("dp4.realizable_omega_config", "point permutations realized by projectivities for the Q(omega) configuration", 6)
def _(ctx):
    return len(build_named_model("omega_config_group").extra["point_group"])


@check("dp4.galois_central", "the Galois vector (1,1,0,0,0) is central", True)
def _(ctx):
    m = build_named_model("omega_config_group")
    G = m.group()
    return m.extra["galois"] in G and G.commutes_with_all(m.extra["galois"])


@check("dp4.random_configs", "realizable permutations of 100 random rational configurations are double transpositions", 100)
def _(ctx):
    rng = ctx.rng("configs")
    ok = 0
    for pts in random_general_configs(rng, 100):
        H = realizable_point_permutations(pts)
        ok += all(is_double_transposition(p) for p in H if p != H.identity)
    return ok


@check("dp4.d5_center", "the center of F2^4 x| D5 is trivial", 1)
def _(ctx):
    return len(center(vector_perm_group(d5_perms())))


# -- dP3 ---------------------------------------------------------------------------------

@check("dp3.order120", "coordinate permutations preserving sum X_i = sum X_i^3 = 0", 120)
def _(ctx):
    m = build_named_model("clebsch_p4")
    G = m.group(ctx.cap)
    return len(G) if all(preserves_surface(m.surface, g) for g in G) else -1


@check("dp3.clebsch_curves", "both lines lie on the surface and are disjoint", [True, True, True])
def _(ctx):
    m = build_named_model("clebsch_p4")
    e1, e2 = m.curves
    return [surface_contains_curve(m.surface, e1), surface_contains_curve(m.surface, e2), curves_disjoint(e1, e2)]


@check("dp3.fermat648", "diagonal cube-root scalings and permutations of the Fermat cubic", 648)
def _(ctx):
    return len(build_named_model("fermat_cubic").group(ctx.cap))


@check("dp3.cubic_lift", "lifts of the 5-cycle preserving the cubic have determinant 1 and -1", [1, -1])
def _(ctx):
    m = build_named_model("clebsch_p4")
    cyc = m.generators[1]
    lifts = lift_form_preserving(cyc, m.surface.equations[1])
    return [int(det(L)) for L in lifts]


@check("dp3.bound_constant", "claimed value of 2^3 * 3^2", 48, erratum=True)
def _(ctx):
    return 2 ** 3 * 3 ** 2


# -- dP2 ---------------------------------------------------------------------------------

@check("dp2.order48", "sign changes and permutations of (x1, x2, x3) in P(2,1,1,1)", 48)
def _(ctx):
    m = build_named_model("dp2_example")
    return len(weighted_aut_group(m.surface, m.generators, cap=ctx.cap))


@check("dp2.curves", "three curves on the surface, pairwise disjoint", [True, True, True, True])
def _(ctx):
    m = build_named_model("dp2_example")
    inside = all(surface_contains_curve(m.surface, c) for c in m.curves)
    disjoint = [curves_disjoint(a, b) for a, b in combinations(m.curves, 2)]
    return [inside] + disjoint


@check("dp2.geiser", "the involution w -> -w preserves the equation", 1)
def _(ctx):
    m = build_named_model("dp2_example")
    return int(form_invariant_under(m.surface.equations[0], m.extra["geiser"]))


# -- dP1 ---------------------------------------------------------------------------------

@check("dp1.order12", "closure of the two generators fixing F4 and F6", 12)
def _(ctx):
    m = dp1_example()
    return len(weighted_aut_group(m.surface, m.generators, cap=ctx.cap))


@check("dp1.presentation", "a^6 = b^2 = (ba)^2 = 1 with 12 elements", True)
def _(ctx):
    m = dp1_example()
    a, b = m.generators
    return verify_presentation({"a": a, "b": b}, ["a^6", "b^2", "(ba)^2", "baba"], 12,
                               cap=ctx.cap, identity=m.extra["identity"])


@check("dp1.stabilizer", "F4(Ax) = F4 and F6(Ax) = F6 for both generators, fails for diag(2, 1)",
       [True, True, False])
def _(ctx):
    m = dp1_example()
    F4, F6 = m.extra["F4"], m.extra["F6"]
    return [dp1_stabilizer_check(m.extra["alpha"], F4, F6), dp1_stabilizer_check(m.extra["beta"], F4, F6),
            dp1_stabilizer_check(_m([[2, 0], [0, 1]]), F4, F6)]


@check("dp1.curves_distinct", "four distinct curves in the claimed list", 4, erratum=True)
def _(ctx):
    comps = {tuple(map(repr, c.components)) for c in dp1_example().curves}
    return len(comps)


@check("dp1.curves_first_bracket_F6", "the curves lie on the surface for lambda = -1/5, mu = -6/5 scaling the first bracket of F6", True, erratum=True)
def _(ctx):
    m = dp1_example()
    return all(surface_contains_curve(m.surface, c) for c in m.curves)


@check("dp1.curves_whole_F6", "containment when lambda scales all of F6; pairwise disjointness", [True, True],
       erratum=True)
def _(ctx):
    m = dp1_example(grouping="whole")
    inside = all(surface_contains_curve(m.surface, c) for c in m.curves)
    disjoint = all(curves_disjoint(a, b) for a, b in combinations(m.curves, 2))
    return [inside, disjoint]


def checks_for(selection: str) -> list[Check]:
    if selection == "all":
        return list(REGISTRY)
    if selection not in SUITES:
        raise KeyError(f"unknown suite {selection!r}")
    return [c for c in REGISTRY if c.suite == selection]


def erratum_residual_F6() -> MultiPoly:
    """Residual of the first curve when lambda scales only the first bracket of F6."""
    m = dp1_example()
    return curve_residuals(m.surface, m.curves[0])[0]
