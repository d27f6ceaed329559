"""
sunrise图的动机几何：爆破图卡、边界点、Griffiths降阶、残差坐标与余作用表
"""
from .charts import (
    HEXAGON,
    HEXAGON_CHARTS,
    BlowupChart,
    SunriseChart,
    chart_for_pair,
    compose_check,
)
from .boundary import CurvePoint, boundary_points, strict_transform
from .griffiths import (
    GriffithsReduction,
    griffiths_reduce,
    is_smooth,
    reduce_numerator,
    specialized_xi,
    sunrise_polynomials,
)
from .residues import ResidueDecomposition, basis_rank, residue_coordinates
from .duality import DualCoefficients, check_duality, dual_coefficients
from .coaction import CoactionTable, coaction_table, is_equal_mass
from .weight0 import Weight0Result, weight0_check
from .appendix import PRINTED_B_PRIME, compare_row, sweep_summary, verify_appendix

__all__ = [
    "HEXAGON",
    "HEXAGON_CHARTS",
    "BlowupChart",
    "SunriseChart",
    "chart_for_pair",
    "compose_check",
    "CurvePoint",
    "boundary_points",
    "strict_transform",
    "GriffithsReduction",
    "griffiths_reduce",
    "is_smooth",
    "reduce_numerator",
    "specialized_xi",
    "sunrise_polynomials",
    "ResidueDecomposition",
    "basis_rank",
    "residue_coordinates",
    "DualCoefficients",
    "check_duality",
    "dual_coefficients",
    "CoactionTable",
    "coaction_table",
    "is_equal_mass",
    "Weight0Result",
    "weight0_check",
    "PRINTED_B_PRIME",
    "compare_row",
    "sweep_summary",
    "verify_appendix",
]
