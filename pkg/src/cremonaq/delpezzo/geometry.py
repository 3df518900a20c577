"""Point configurations, parametrized curves and hypersurfaces in (weighted) projective space."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from ..exactalg import MultiPoly, as_scalar, binary_forms_common_root, poly_compose_linear, poly_substitute
from ..groupkit import DEFAULT_CLOSURE_CAP, FiniteGroup, Perm, closure
from ..projlin import Matrix, ProjMap, det, form_multiplier, from_columns, mat_inverse, mat_mul, mat_vec, solve

Point = tuple

PARAMS = ("a", "b")


def point(*coords) -> Point:
    p = tuple(as_scalar(c) for c in coords)
    if not any(p):
        raise ValueError("the zero vector is not a projective point")
    return p


def same_point(p: Point, q: Point) -> bool:
    """Projective equality: all 2x2 minors of [p; q] vanish."""
    return all(p[i] * q[j] == p[j] * q[i] for i, j in combinations(range(len(p)), 2))


def _det3(p: Point, q: Point, r: Point):
    return det((p, q, r))


def collinear(p: Point, q: Point, r: Point) -> bool:
    if same_point(p, q) or same_point(p, r) or same_point(q, r):
        raise ValueError("points must be distinct")
    return not _det3(p, q, r)


def _veronese(p: Point) -> tuple:
    x, y, z = p
    return (x * x, x * y, y * y, x * z, y * z, z * z)


def six_on_conic(points: Sequence[Point]) -> bool:
    if len(points) != 6:
        raise ValueError(f"six points required, got {len(points)}")
    return not det(tuple(_veronese(p) for p in points))


def general_position(config: Sequence[Point], no3collinear: bool = True, no6onconic: bool = False) -> bool:
    pts = list(config)
    for p, q in combinations(pts, 2):
        if same_point(p, q):
            return False
    if no3collinear and any(not _det3(*t) for t in combinations(pts, 3)):
        return False
    if no6onconic and any(six_on_conic(s) for s in combinations(pts, 6)):
        return False
    return True


def frame_matrix(points: Sequence[Point]) -> Matrix:
    """Columns l_i p_i (i < 3) with sum l_i p_i = p_3; sends e_i to p_i and (1,1,1) to p_3."""
    if len(points) != 4:
        raise ValueError("four points required")
    P = from_columns(points[:3])
    if not det(P):
        raise ValueError("degenerate quadruple")
    lam = solve(P, points[3])
    if not all(lam):
        raise ValueError("degenerate quadruple")
    return from_columns([tuple(l * x for x in p) for l, p in zip(lam, points[:3])])


def unique_projectivity(src: Sequence[Point], dst: Sequence[Point]) -> ProjMap:
    """The projective map sending src[i] to dst[i] for four points in general position."""
    return ProjMap(mat_mul(frame_matrix(dst), mat_inverse(frame_matrix(src))))


def apply_map(m: ProjMap | Matrix, p: Point) -> Point:
    M = m.matrix if isinstance(m, ProjMap) else m
    return mat_vec(M, p)


def realizable_point_permutations(config: Sequence[Point]) -> FiniteGroup:
    """Permutations s of the five points induced by a projectivity with A_i -> A_s(i).

    The projectivity fixed by the first four images sends A_5 to A_s(5) iff the two
    points have proportional coordinates in their frames; frame coordinates are
    ratios of 3x3 brackets, so only the ten brackets of the configuration are needed.
    """
    pts = [tuple(as_scalar(x) for x in p) for p in config]
    if len(pts) != 5:
        raise ValueError("five points required")
    if not general_position(pts):
        raise ValueError("configuration is not in general position")
    cache = {}

    def bracket(i, j, k):
        key = (i, j, k)
        if key not in cache:
            cache[key] = _det3(pts[i], pts[j], pts[k])
        return cache[key]

    def frame_coords(s):
        p1, p2, p3, p4, q = s
        return (bracket(q, p2, p3) / bracket(p4, p2, p3),
                bracket(p1, q, p3) / bracket(p1, p4, p3),
                bracket(p1, p2, q) / bracket(p1, p2, p4))

    base = frame_coords(range(5))
    found = [Perm(s) for s in permutations(range(5)) if same_point(frame_coords(s), base)]
    ident = Perm.identity(5)
    return closure([p for p in found if p != ident], identity=ident)


# -- weighted hypersurfaces and parametrized curves -------------------------------

@dataclass
class WeightedHypersurface:
    """Common zero set of weighted-homogeneous equations in one variable table."""

    variables: tuple
    weights: tuple
    equations: list

    def __post_init__(self):
        self.variables = tuple(self.variables)
        self.weights = tuple(self.weights)
        for eq in self.equations:
            if eq.variables != self.variables or eq.weights != self.weights:
                raise ValueError("equation lives in a different variable table")
            if not eq.is_homogeneous():
                raise ValueError(f"equation is not weighted-homogeneous: {eq}")

    def degrees(self) -> list[int]:
        return [eq.degree() for eq in self.equations]

    def gens(self) -> tuple[MultiPoly, ...]:
        return MultiPoly.gens(self.variables, self.weights)


@dataclass
class ParamCurve:
    """Image of P^1 under coordinate forms of degree weight_i * e in the parameters (a, b)."""

    weights: tuple
    components: list
    name: str = field(default="")

    def __post_init__(self):
        self.weights = tuple(self.weights)
        self.components = [c if isinstance(c, MultiPoly) else MultiPoly.constant(PARAMS, c)
                           for c in self.components]
        if len(self.components) != len(self.weights):
            raise ValueError("one component per ambient coordinate required")
        if not any(self.components):
            raise ValueError("all components vanish")
        degs = {Fraction(c.degree(), w) for c, w in zip(self.components, self.weights) if c}
        if len(degs) != 1 or any(not c.is_homogeneous() for c in self.components):
            raise ValueError("components are not weighted-compatible forms")
        if binary_forms_common_root(self.components):
            raise ValueError("components share a root, the map is not defined everywhere")

    @property
    def scale(self) -> int:
        c, w = next((c, w) for c, w in zip(self.components, self.weights) if c)
        return c.degree() // w


def param_gens() -> tuple[MultiPoly, MultiPoly]:
    return MultiPoly.gens(PARAMS)


def curve_residuals(S: WeightedHypersurface, c: ParamCurve) -> list[MultiPoly]:
    if c.weights != S.weights:
        raise ValueError(f"curve weights {c.weights} do not match ambient {S.weights}")
    assignment = dict(zip(S.variables, c.components))
    return [poly_substitute(eq, assignment) for eq in S.equations]


def surface_contains_curve(S: WeightedHypersurface, c: ParamCurve) -> bool:
    return not any(curve_residuals(S, c))


def _chart(c: ParamCurve) -> tuple[int, int] | None:
    a, b = param_gens()
    i = next((k for k, (f, w) in enumerate(zip(c.components, c.weights)) if w == 1 and f == a), None)
    j = next((k for k, (f, w) in enumerate(zip(c.components, c.weights)) if w == 1 and f == b), None)
    return None if i is None or j is None else (i, j)


def _meets(c1: ParamCurve, c2: ParamCurve, chart: tuple[int, int]) -> bool:
    # c2 reads off its parameters from coordinates i, j, so a point of c1 lies on c2
    # iff c2(c1_i, c1_j) == c1 coordinatewise
    i, j = chart
    sub = {PARAMS[0]: c1.components[i], PARAMS[1]: c1.components[j]}
    diffs = []
    for f1, f2 in zip(c1.components, c2.components):
        image = poly_substitute(f2, sub) if f2 else MultiPoly(PARAMS)
        diffs.append(image - f1)
    if not any(diffs):
        return True
    return binary_forms_common_root(diffs)


def curves_disjoint(c1: ParamCurve, c2: ParamCurve) -> bool:
    """No common point over the algebraic closure.

    One of the curves must expose its parameters as two weight-1 coordinates.
    """
    if c1.weights != c2.weights:
        raise ValueError("curves live in different ambient spaces")
    chart = _chart(c2)
    if chart is not None:
        return not _meets(c1, c2, chart)
    chart = _chart(c1)
    if chart is not None:
        return not _meets(c2, c1, chart)
    raise ValueError("neither curve is given in a coordinate chart (a, b)")


# -- invariance and automorphism groups ----------------------------------------

def form_invariant_under(F: MultiPoly, m: ProjMap | Matrix):
    """The scalar c with F(Mx) = c F(x), or None."""
    M = m.matrix if isinstance(m, ProjMap) else m
    return form_multiplier(F, M)


def preserves_surface(S: WeightedHypersurface, m: ProjMap) -> bool:
    return all(form_invariant_under(eq, m) is not None for eq in S.equations)


def weighted_aut_group(S: WeightedHypersurface, generators: Sequence[ProjMap],
                       cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    gens = list(generators)
    for g in gens:
        if tuple(g.weights) != S.weights:
            raise ValueError("generator weights do not match the ambient space")
        if not preserves_surface(S, g):
            raise ValueError(f"generator does not preserve the surface: {g}")
    ident = ProjMap.identity(len(S.weights), S.weights)
    return closure([g for g in gens if g != ident], cap=cap, identity=ident)


def dp1_stabilizer_check(A: Matrix, F4: MultiPoly, F6: MultiPoly) -> bool:
    """F4(Ax) == F4 and F6(Ax) == F6 exactly (no scalar allowed)."""
    if not det(A):
        raise ValueError("matrix must be invertible")
    return poly_compose_linear(F4, A) == F4 and poly_compose_linear(F6, A) == F6


def embed_binary(A: Matrix, weights: Sequence[int] = (3, 1, 1, 2)) -> ProjMap:
    """[w:x:y:z] -> [w : A(x, y) : z] in P(3,1,1,2)."""
    (a, b), (c, d) = A
    one, zero = Fraction(1), Fraction(0)
    M = ((one, zero, zero, zero), (zero, a, b, zero), (zero, c, d, zero), (zero, zero, zero, one))
    return ProjMap(M, weights)
