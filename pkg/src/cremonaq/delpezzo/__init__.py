"""Surface models: point configurations, the degree 6 hexagon group, weighted hypersurfaces."""

from .geometry import (
    ParamCurve,
    WeightedHypersurface,
    collinear,
    curves_disjoint,
    dp1_stabilizer_check,
    form_invariant_under,
    general_position,
    realizable_point_permutations,
    six_on_conic,
    surface_contains_curve,
    unique_projectivity,
    weighted_aut_group,
)
from .hexagon import (
    HexAut,
    build_hexagon_group,
    hexaut_compose,
    semilinear_commutes,
    torus_centralizer,
)
from .models import MODEL_NAMES, NamedModel, build_named_model

__all__ = [
    "HexAut", "MODEL_NAMES", "NamedModel", "ParamCurve", "WeightedHypersurface",
    "build_hexagon_group", "build_named_model", "collinear", "curves_disjoint",
    "dp1_stabilizer_check", "form_invariant_under", "general_position", "hexaut_compose",
    "realizable_point_permutations", "semilinear_commutes", "six_on_conic",
    "surface_contains_curve", "torus_centralizer", "unique_projectivity", "weighted_aut_group",
]
