"""
数值周期层：椭圆周期、单值矩阵、单纯形积分、Eichler积分
"""
from .eichler import eichler_integral, unipotent_period
from .eisenstein import (
    QExpansion,
    delta_expansion,
    e4_expansion,
    e6_expansion,
    g2,
    g2_expansion,
    g2_star,
    mobius,
    reduce_to_fundamental_domain,
)
from .elliptic import (
    EllipticData,
    LongWeierstrass,
    WeierstrassModel,
    elliptic_periods,
    j_invariant,
    period_oracle,
    to_weierstrass,
)
from .quadrature import QuadratureResult, simplex_quadrature
from .single_valued import (
    bloch_wigner,
    dilog_period_matrix,
    elliptic_period_matrix,
    incomplete_period_matrix,
    log_period_matrix,
    sv_dilog_corner,
    sv_elliptic_matrix,
    sv_from_period_matrix,
    sv_incomplete_pair,
)
from .tube import TUBE_PAIRS, TubeCheck, track_path, tube_check, tube_checks, tube_integral
from .values import complex_to_dict, parse_complex, real_to_str
from .zeta import quasi_periods, weierstrass_zeta

__all__ = [
    "QExpansion",
    "delta_expansion",
    "e4_expansion",
    "e6_expansion",
    "g2",
    "g2_expansion",
    "g2_star",
    "mobius",
    "reduce_to_fundamental_domain",
    "EllipticData",
    "LongWeierstrass",
    "WeierstrassModel",
    "elliptic_periods",
    "j_invariant",
    "period_oracle",
    "to_weierstrass",
    "QuadratureResult",
    "simplex_quadrature",
    "bloch_wigner",
    "dilog_period_matrix",
    "elliptic_period_matrix",
    "incomplete_period_matrix",
    "log_period_matrix",
    "sv_dilog_corner",
    "sv_elliptic_matrix",
    "sv_from_period_matrix",
    "sv_incomplete_pair",
    "TubeCheck",
    "track_path",
    "tube_check",
    "tube_checks",
    "tube_integral",
    "complex_to_dict",
    "parse_complex",
    "real_to_str",
    "quasi_periods",
    "weierstrass_zeta",
    "eichler_integral",
    "unipotent_period",
]
