"""Named surfaces with their explicit automorphism generators and curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactalg import Cyclotomic, MultiPoly, poly_substitute
from ..groupkit import FiniteGroup, Perm, PermVectorElement, closure
from ..projlin import ProjMap, as_matrix
from .geometry import (
    ParamCurve,
    WeightedHypersurface,
    embed_binary,
    param_gens,
    realizable_point_permutations,
)
from .hexagon import build_hexagon_group, hexagon_generators, galois_twist


@dataclass
class NamedModel:
    name: str
    surface: WeightedHypersurface | None
    generators: list
    curves: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def group(self, cap: int = 100_000) -> FiniteGroup:
        build = self.extra.get("build_group")
        if build is not None:
            return build()
        ident = self.extra["identity"]
        return closure([g for g in self.generators if g != ident], cap=cap, identity=ident)


def permutation_matrix(images, n: int) -> tuple:
    """Matrix sending e_i to e_images[i]."""
    return as_matrix([[1 if images[j] == i else 0 for j in range(n)] for i in range(n)])


# -- degree 6 ----------------------------------------------------------------

def hexagon_x() -> NamedModel:
    names = ("x0", "x1", "x2", "y0", "y1", "y2")
    x0, x1, x2, y0, y1, y2 = MultiPoly.gens(names)
    S = WeightedHypersurface(names, (1,) * 6, [x0 * y0 - x1 * y1, x1 * y1 - x2 * y2])
    return NamedModel("hexagon_X", S, hexagon_generators(6),
                      extra={"build_group": build_hexagon_group, "twist": galois_twist(6)})


# -- degree 3: Clebsch surface in P^4 -------------------------------------------

def clebsch_p4() -> NamedModel:
    names = tuple(f"X{i}" for i in range(5))
    X = MultiPoly.gens(names)
    S = WeightedHypersurface(names, (1,) * 5, [sum(X[1:], X[0]), sum((x ** 3 for x in X[1:]), X[0] ** 3)])
    gens = [ProjMap(permutation_matrix((1, 0, 2, 3, 4), 5)), ProjMap(permutation_matrix((1, 2, 3, 4, 0), 5))]
    a, b = param_gens()
    zero = MultiPoly(("a", "b"))
    e1 = ParamCurve((1,) * 5, [zero, a, -a, b, -b], "E1")
    e2 = ParamCurve((1,) * 5, [a, zero, b, -a, -b], "E2")
    return NamedModel("clebsch_p4", S, gens, [e1, e2], {"identity": ProjMap.identity(5)})


# -- degree 3: Fermat cubic over Q(zeta_3) ---------------------------------------

def fermat_cubic() -> NamedModel:
    names = tuple(f"t{i}" for i in range(4))
    t = MultiPoly.gens(names)
    S = WeightedHypersurface(names, (1,) * 4, [sum((x ** 3 for x in t[1:]), t[0] ** 3)])
    one, zero, w = Cyclotomic.rational(3, 1), Cyclotomic.rational(3, 0), Cyclotomic.zeta(3)
    scale = tuple(tuple(w if (i == j == 0) else (one if i == j else zero) for j in range(4)) for i in range(4))

    def perm(images):
        return tuple(tuple(one if images[j] == i else zero for j in range(4)) for i in range(4))

    gens = [ProjMap(scale), ProjMap(perm((1, 0, 2, 3))), ProjMap(perm((1, 2, 3, 0)))]
    ident = ProjMap(perm((0, 1, 2, 3)))
    return NamedModel("fermat_cubic", S, gens, extra={"identity": ident})


# -- degree 2 -------------------------------------------------------------------------

DP2_WEIGHTS = (2, 1, 1, 1)


def dp2_example() -> NamedModel:
    names = ("w", "x1", "x2", "x3")
    w, x1, x2, x3 = MultiPoly.gens(names, DP2_WEIGHTS)
    quartic = -(x1 ** 4 + x2 ** 4 + x3 ** 4) + 5 * (x1 ** 2 * x2 ** 2 + x1 ** 2 * x3 ** 2 + x2 ** 2 * x3 ** 2)
    S = WeightedHypersurface(names, DP2_WEIGHTS, [3 * w ** 2 - quartic])

    def diag(*d):
        return ProjMap(as_matrix([[d[i] if i == j else 0 for j in range(4)] for i in range(4)]), DP2_WEIGHTS)

    def swap(i, j):
        images = list(range(4))
        images[i], images[j] = j, i
        return ProjMap(permutation_matrix(images, 4), DP2_WEIGHTS)

    gens = [diag(-1, 1, 1, 1), diag(1, -1, 1, 1), diag(1, 1, -1, 1), swap(1, 2), swap(2, 3)]
    a, b = param_gens()
    curves = [
        ParamCurve(DP2_WEIGHTS, [a * a + a * b + b * b, a, b, -a - b], "E1"),
        ParamCurve(DP2_WEIGHTS, [-a * a - a * b - b * b, a, b, a + b], "E2"),
        ParamCurve(DP2_WEIGHTS, [a * a + 2 * a * b - b * b, a, b, 2 * a - b], "E3"),
    ]
    return NamedModel("dp2_example", S, gens, curves,
                      {"identity": ProjMap.identity(4, DP2_WEIGHTS), "geiser": diag(-1, 1, 1, 1)})


# -- degree 1 -------------------------------------------------------------------------

DP1_WEIGHTS = (3, 1, 1, 2)
DP1_ALPHA = as_matrix([[0, -1], [1, 1]])   # (x, y) -> (-y, x + y)
DP1_BETA = as_matrix([[-1, -1], [0, 1]])   # (x, y) -> (-x - y, y)


def dp1_forms(lam, mu, grouping: str = "first_bracket") -> tuple[MultiPoly, MultiPoly]:
    """F4 and F6 in (x, y).

    ``first_bracket`` scales only the first bracket of F6 by lam; ``whole`` scales the sum.
    """
    x, y = MultiPoly.gens(("x", "y"))
    lam, mu = Fraction(lam), Fraction(mu)
    q = x * x + x * y + y * y
    F4 = mu * q * q
    first = x ** 2 * y ** 4 + 2 * x ** 3 * y ** 3 + x ** 4 * y ** 2
    second = 3 * x ** 5 * y + 3 * x * y ** 5 - 5 * x ** 3 * y ** 3 + x ** 6 + y ** 6
    if grouping == "first_bracket":
        F6 = lam * first + second
    elif grouping == "whole":
        F6 = lam * (first + second)
    else:
        raise ValueError(f"unknown grouping {grouping!r}")
    return F4, F6


def dp1_surface(F4: MultiPoly, F6: MultiPoly) -> WeightedHypersurface:
    names = ("w", "x", "y", "z")
    w, x, y, z = MultiPoly.gens(names, DP1_WEIGHTS)
    sub = {"x": x, "y": y}
    f4, f6 = poly_substitute(F4, sub), poly_substitute(F6, sub)
    return WeightedHypersurface(names, DP1_WEIGHTS, [w ** 2 - z ** 3 - f4 * z - f6])


def dp1_curves() -> list[ParamCurve]:
    a, b = param_gens()
    cubic = a * a * b + a * b * b
    conic = -(a * a + a * b + b * b)
    return [
        ParamCurve(DP1_WEIGHTS, [cubic, a, b, conic], "E1"),
        ParamCurve(DP1_WEIGHTS, [-cubic, a, b, conic], "E2"),
        ParamCurve(DP1_WEIGHTS, [a * b * (a + b), a, b, conic], "E3"),
        ParamCurve(DP1_WEIGHTS, [-a * b * (a + b), a, b, conic], "E4"),
    ]


def dp1_example(lam=Fraction(-1, 5), mu=Fraction(-6, 5), grouping: str = "first_bracket") -> NamedModel:
    F4, F6 = dp1_forms(lam, mu, grouping)
    S = dp1_surface(F4, F6)
    gens = [embed_binary(DP1_ALPHA), embed_binary(DP1_BETA)]
    return NamedModel("dp1_example", S, gens, dp1_curves(),
                      {"identity": ProjMap.identity(4, DP1_WEIGHTS), "F4": F4, "F6": F6,
                       "alpha": DP1_ALPHA, "beta": DP1_BETA})


# -- degree 4: the abstract group of the blow-up of five points over Q(omega) ------

def omega_config_points() -> list[tuple]:
    one, zero, w = Cyclotomic.rational(3, 1), Cyclotomic.rational(3, 0), Cyclotomic.zeta(3)
    return [(one, w, w * w), (one, w * w, w), (one, zero, zero), (zero, one, zero), (zero, zero, one)]


def even_weight_basis(r: int = 5) -> list[tuple]:
    return [tuple(1 if k in (i, i + 1) else 0 for k in range(r)) for i in range(r - 1)]


def vector_perm_group(perms: list[Perm], r: int = 5) -> FiniteGroup:
    """Even-weight F_2^r extended by the given coordinate permutations."""
    ident_perm = Perm.identity(r)
    zero = (0,) * r
    gens = [PermVectorElement(v, ident_perm) for v in even_weight_basis(r)]
    gens += [PermVectorElement(zero, p) for p in perms if p != ident_perm]
    return closure(gens, identity=PermVectorElement(zero, ident_perm))


def omega_config_group() -> NamedModel:
    H = realizable_point_permutations(omega_config_points())
    galois = PermVectorElement((1, 1, 0, 0, 0), Perm.identity(5))
    return NamedModel("omega_config_group", None, list(H.generators),
                      extra={"build_group": lambda: vector_perm_group(list(H.generators)),
                             "point_group": H, "galois": galois})


def d5_perms() -> list[Perm]:
    return [Perm((1, 2, 3, 4, 0)), Perm((0, 4, 3, 2, 1))]


_BUILDERS = {
    "hexagon_X": hexagon_x,
    "clebsch_p4": clebsch_p4,
    "fermat_cubic": fermat_cubic,
    "dp2_example": dp2_example,
    "dp1_example": dp1_example,
    "omega_config_group": omega_config_group,
}

MODEL_NAMES = tuple(_BUILDERS)


def build_named_model(name: str, **params) -> NamedModel:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown model {name!r}; known: {', '.join(MODEL_NAMES)}") from None
    return builder(**params)
