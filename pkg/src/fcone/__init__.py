"""Exact-arithmetic divisor classes on the moduli of pointed rational
curves: cyclic-cover pullbacks, eigenbundle determinants, F-curve
pairings, and polyhedral certificates for extremal rays."""

from .exactlin import (
    dot,
    format_rational,
    kernel_basis,
    parse_rational,
    primitive,
    qmatrix,
    qvector,
    rank,
    solve,
)
from .cones import (
    Certificate,
    ConeH,
    ConeV,
    contains,
    extremality_certificate,
    extreme_rays,
    extreme_rays_by_enumeration,
    format_cone,
    parse_cone,
)
from .moduli import (
    FullDivisor,
    FullFCurve,
    SymDivisor,
    SymFCurve,
    canonical_side,
    delta_range,
    enumerate_full_fcurves,
    enumerate_sym_fcurves,
    fcurve_class_vector,
    format_divisor,
    full_pairing,
    parse_divisor,
    proportional,
    psi_expand,
    standard_full_fcurve,
    sym_divisor_from_vector,
    sym_pairing,
    symmetrize,
    tk_pairing,
)
from .covers import (
    WeightData,
    conformal_blocks_class,
    eigen_det_class,
    exceptional_genus,
    genus,
    hodge_class,
    log_canonical_class,
    p5_class,
    pullback_boundary,
    pullback_combo,
    residue,
    weighted_pullbacks,
)
from .eigenforms import (
    BranchData,
    eigen_rank_degree_fcurve,
    h0_weight_3pt,
    h0_weight_4pt,
    oracle_h0,
)
from .tables import (
    TABLE_NAMES,
    annotation_candidates,
    fcone_rays,
    fcurve_cone,
    ray_annotations,
    t3_certificate_blocks,
    table_csv,
    triple_cover_divisor,
)
from .cli import main

__version__ = "0.1.0"
