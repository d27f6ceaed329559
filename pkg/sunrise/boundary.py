"""
sunrise三次曲线与边界除子的六个交点，编号沿六边形 P1, P2, …, P6 依次相邻
P_{2i−1} : 顶点 e_i 爆破后的例外除子上，切锥方向 α_a + α_b = 0
P_{2i}   : 连接 e_i 与 e_{i+1} 的直线上，即 P2 在 α₃ = 0、P4 在 α₁ = 0、P6 在 α₂ = 0，
           直线 α_l = 0 上满足 m_j α_j + m_k α_k = 0
"""
import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, Tuple

import sympy as sp

from algebra.polynomial import MPoly
from common.errors import DegenerateKinematicsError
from common.kinematics import KinematicPoint
from .charts import SunriseChart

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurvePoint:
    label: str
    kind: str  # "line" 或 "exceptional"
    index: int  # 直线 α_i = 0 或顶点 e_i 的下标
    image: Tuple[sp.Rational, sp.Rational, sp.Rational]  # 在 ℙ² 中的像

    def chart_coordinates(self, chart: SunriseChart) -> Tuple[sp.Rational, sp.Rational]:
        """该点在图卡 (s, t) 中的坐标"""
        if self.kind == "line":
            if chart.a != self.index or self.image[chart.c - 1] == 0:
                raise DegenerateKinematicsError(f"chart failure: {self.label} 不在 {chart.label} 中")
            return sp.Integer(0), self.image[chart.b - 1] / self.image[chart.c - 1]
        if chart.c != self.index:
            raise DegenerateKinematicsError(f"chart failure: {self.label} 不在 {chart.label} 中")
        return sp.Integer(-1), sp.Integer(0)

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "index": self.index,
            "image": [str(c) for c in self.image],
        }


def strict_transform(xi: MPoly, chart: SunriseChart) -> sp.Expr:
    """F(s, t) = Ξ(α(s,t)) / t"""
    pulled = sp.expand(xi.expr.xreplace(chart.substitution()))
    return sp.expand(sp.cancel(pulled / chart.t))


def _masses(kin: KinematicPoint):
    m1, m2, m3, _ = kin.sunrise_masses()
    masses = (m1, m2, m3)
    if any(m == 0 for m in masses):
        raise DegenerateKinematicsError(f"degenerate kinematics: 质量平方为0 {kin.to_dict()}")
    return masses


def boundary_points(kin: KinematicPoint, xi: MPoly = None) -> "OrderedDict[str, CurvePoint]":
    """按 P1..P6 排序；xi 给出时检查每个点都在严格变换上"""
    masses = _masses(kin)
    points: "OrderedDict[str, CurvePoint]" = OrderedDict()
    for i in (1, 2, 3):
        vertex = tuple(sp.Integer(1) if k == i else sp.Integer(0) for k in (1, 2, 3))
        points[f"P{2 * i - 1}"] = CurvePoint(f"P{2 * i - 1}", "exceptional", i, vertex)

        # 直线 α_l = 0 经过 e_i 与 e_{i+1}
        l = (i + 1) % 3 + 1
        j, k = l % 3 + 1, (l + 1) % 3 + 1
        coords = [sp.Integer(0)] * 3
        coords[j - 1] = -masses[k - 1] / masses[j - 1]
        coords[k - 1] = sp.Integer(1)
        if not all(c.is_Rational for c in coords):
            raise DegenerateKinematicsError(f"non-rational point: P{2 * i}")
        points[f"P{2 * i}"] = CurvePoint(f"P{2 * i}", "line", l, tuple(coords))

    ordered = OrderedDict((f"P{n}", points[f"P{n}"]) for n in range(1, 7))
    if xi is not None:
        _check_on_curve(ordered, xi)
    return ordered


def _check_on_curve(points, xi: MPoly):
    from .charts import HEXAGON_CHARTS

    for chart in HEXAGON_CHARTS:
        F = strict_transform(xi, chart)
        for point in points.values():
            try:
                s, t = point.chart_coordinates(chart)
            except DegenerateKinematicsError:
                continue
            if F.xreplace({chart.s: s, chart.t: t}) != 0:
                raise DegenerateKinematicsError(
                    f"{point.label} 不在 {chart.label} 的严格变换上"
                )
