"""
残差形式在基 {df₂,…,df₆, res η_G, res ω_G} 下的坐标

沿六边形 Q1..Q6 = P2, P3, P4, P5, P6, P1，每对相邻点落在同一图卡中，第k个分量即 df_{k+1} 的系数，
边界势 G 在两点的差给出
    a_k − a_{k+1} = G(Q_k) − G(Q_{k+1}),   a_6 := 0
第六个图卡（闭合对 Q6, Q1）不参与求解，只用作一致性证书。
"""
import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import sympy as sp

from algebra.polynomial import MPoly
from common.errors import DegenerateKinematicsError
from common.kinematics import KinematicPoint, format_rational
from integrands.projform import ProjForm
from .boundary import CurvePoint, boundary_points, strict_transform
from .charts import HEXAGON, HEXAGON_CHARTS, SunriseChart, chart_for_pair
from .griffiths import GriffithsReduction, Potential, griffiths_reduce, specialized_xi

logger = logging.getLogger(__name__)

# 前五个分量依次对应 Q1..Q5，即 df(P2)..df(P6)
COMPONENT_LABELS: Tuple[str, ...] = tuple(f"df{p[1:]}" for p in HEXAGON[:5]) + ("res_eta", "res_omega")


def chart_potential(potential: Potential, chart: SunriseChart) -> sp.Expr:
    """
    β = Σφ_i dα_i/Ξ 拉回图卡后沿曲线的 dt 分量分子：
    R(s, t) = φ_a·s + φ_b（dα_a = s dt + t ds, dα_b = dt, dα_c = 0）
    """
    sub = chart.substitution()
    phi_a = potential[chart.a - 1].expr.xreplace(sub)
    phi_b = potential[chart.b - 1].expr.xreplace(sub)
    return sp.expand(phi_a * chart.s + phi_b)


def point_value(
    potential: Potential, xi: MPoly, chart: SunriseChart, point: CurvePoint
) -> sp.Rational:
    """边界势在 point 处的取值（有理数）"""
    s, t = chart.s, chart.t
    R = chart_potential(potential, chart)
    F = strict_transform(xi, chart)
    s0, t0 = point.chart_coordinates(chart)

    if point.kind == "line":
        # 直线 s = 0 上 β = R(0,t)dt/(t·F(0,t))，在单根 t0 处取 R/(t·F_t)
        denominator = (t * sp.diff(F, t)).xreplace({s: s0, t: t0})
        if denominator == 0:
            raise DegenerateKinematicsError(f"chart failure: {point.label} 不是单根")
        return sp.Rational(R.xreplace({s: s0, t: t0}) / denominator)

    # 例外除子 t = 0 上 β 的值 R(s,0)/F(s,0) 与 s 无关
    ratio = sp.cancel(R.xreplace({t: 0}) / F.xreplace({t: 0}))
    if ratio.has(s) or ratio.has(sp.zoo, sp.nan):
        raise DegenerateKinematicsError(f"chart failure: {point.label} 处边界势不是常数 {ratio}")
    return sp.Rational(ratio)


@dataclass(frozen=True)
class ResidueDecomposition:
    """a-向量与其见证数据"""

    form_name: str
    a: Tuple[sp.Rational, ...]
    reduction: GriffithsReduction
    xi: MPoly
    point_values: Dict[str, Dict[str, sp.Rational]] = field(default_factory=dict)
    chain: Tuple[sp.Rational, ...] = ()
    closure: sp.Rational = sp.Integer(0)

    @property
    def closure_ok(self) -> bool:
        return sum(self.chain, sp.Integer(0)) + self.closure == 0

    def verify(self) -> bool:
        """重新展开Griffiths恒等式，检查闭合对以及同一点在不同图卡中的取值一致"""
        if not self.reduction.verify(self.xi):
            return False
        if not self.closure_ok:
            return False
        by_point: Dict[str, set] = {}
        for values in self.point_values.values():
            for label, value in values.items():
                by_point.setdefault(label, set()).add(value)
        return all(len(v) == 1 for v in by_point.values())

    def to_dict(self) -> Dict:
        return {
            "form": self.form_name,
            "a": [format_rational(x) for x in self.a],
            "labels": list(COMPONENT_LABELS),
            "closure_ok": self.closure_ok,
        }


def residue_coordinates(form: ProjForm, kin: KinematicPoint) -> ResidueDecomposition:
    reduction = griffiths_reduce(form, kin)
    xi = specialized_xi(kin)

    if reduction.potential is None:
        a = (sp.Integer(0),) * 5 + (reduction.c_eta, reduction.c_omega)
        return ResidueDecomposition(form_name=form.name, a=a, reduction=reduction, xi=xi)

    points = boundary_points(kin, xi)
    point_values: "OrderedDict[str, Dict[str, sp.Rational]]" = OrderedDict()
    diffs: List[sp.Rational] = []
    for k in range(1, 7):
        first, second, chart = chart_for_pair(k)
        v1 = point_value(reduction.potential, xi, chart, points[first])
        v2 = point_value(reduction.potential, xi, chart, points[second])
        point_values[chart.label] = {first: v1, second: v2}
        diffs.append(v1 - v2)

    # a_5 = d_5, a_k = a_{k+1} + d_k
    components = [sp.Integer(0)] * 6
    for k in range(5, 0, -1):
        components[k - 1] = components[k] + diffs[k - 1]

    decomposition = ResidueDecomposition(
        form_name=form.name,
        a=tuple(components[:5]) + (reduction.c_eta, reduction.c_omega),
        reduction=reduction,
        xi=xi,
        point_values=dict(point_values),
        chain=tuple(diffs[:5]),
        closure=diffs[5],
    )
    if not decomposition.closure_ok:
        logger.warning(f"闭合图卡不一致: {form.name} at {kin.to_dict()}")
    logger.debug(f"{form.name}: a = {[format_rational(x) for x in decomposition.a]}")
    return decomposition


def coordinate_matrix(decompositions: List[ResidueDecomposition]) -> sp.Matrix:
    return sp.Matrix([list(d.a) for d in decompositions])


def basis_rank(decompositions: List[ResidueDecomposition]) -> int:
    """{ν₁,ν₂,ν₃,η_G,ω_G} 的坐标矩阵在一般运动学下秩为5"""
    return coordinate_matrix(decompositions).rank()


__all__ = [
    "COMPONENT_LABELS",
    "HEXAGON",
    "HEXAGON_CHARTS",
    "ResidueDecomposition",
    "basis_rank",
    "chart_potential",
    "coordinate_matrix",
    "point_value",
    "residue_coordinates",
]
