"""Linearized Reed-Solomon codes: finite-field towers, sum-rank codes, equivalence and class counts."""

from __future__ import annotations

from .codes import (
    BlockCode,
    LrsParams,
    gabidulin_generator,
    is_mrd,
    is_msrd,
    lrs_generator,
    min_distance_exhaustive,
    rank_weight,
    sum_rank_weight,
)
from .counting import (
    OrbitPartition,
    OrbitReport,
    burnside_orbits,
    count_inequivalent_lrs,
    count_orbits,
    enumerate_orbits,
    f_table,
    psi,
)
from .equivalence import EquivDecision, Reason, Verdict, lrs_equivalent, norm_set, normalize_twist, scaled_match
from .errors import CapExceededError, InvariantViolation, NormCollisionError, ParameterError
from .ff import FieldSpec, FieldTower, build_tower, tower, tower_for_q
from .geometry import QSystem, brute_force_equivalent, min_distance_geometric, system_from_code, weight_geometric
from .linpoly import LinearizedPoly, dickson, image_dim, kernel_dim

__version__ = "0.1.0"
