"""Constant-dimension subspace codes in PG(5,q).

Constructions of (6, q^6+2q^2+2q+1, 4; 3)_q codes from a lifted rank-metric
code with a removed-and-rearranged plane family, plus the verification and
analysis toolkit: subspace distances, degree distributions, configuration
counts, partial-spread classification in PG(4,2), automorphism groups and
isomorphism tests, bounds, and a CLI with deterministic file formats.
"""

from .analysis import (
    are_isomorphic,
    automorphism_order,
    code_report,
    degree_distribution,
    feasibility_check,
    find_light_plane,
    is_maximal,
    min_distance,
    nine_configurations,
    partial_spread_max,
    recursive_bound,
    s_profile,
    seventeen_config_count,
)
from .constructions import (
    construction_a,
    construction_a_core,
    construction_a_parts,
    lift_gabidulin,
    lmrd_cap_check,
    maximal_core_plus_s,
)
from .fields import SUPPORTED_Q, ext_field, make_field
from .geometry import (
    enumerate_flats,
    gaussian,
    geometry,
    lines_disjoint_from,
    plane_spread_field_reduction,
    special_flat,
)
from .linalg import (
    Space,
    Subspace,
    SubspaceCode,
    dual,
    dual_code,
    from_rows,
    rref,
    space,
    subspace_distance,
    subspace_intersect,
    subspace_sum,
    subspaces_of,
)
from .pg42_spreads import classify_all_size9, construct_type, profile, spread_aut_and_orbits

__all__ = [name for name in dir() if not name.startswith("_")]
