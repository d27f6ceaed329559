"""
管状积分：沿三次曲线上一条路径 γ 取半径 ε 的小圆管 T(γ)，
(1/2πi)∫_{T(γ)} A·Ω/Ξ^k 等于残差形式沿 γ 的积分，
即边界势在两端点的取值之差，用作残差坐标的独立数值证据。

六边形的前五对相邻点各有一个图卡 α_c = 1, α_a = s·t, α_b = t，其中一点在直线 s = 0 上，
另一点是例外除子 t = 0 上的 s = −1。路径 s(τ) = −½ + ½e^{iπτ} 从直线上的点走到例外除子上的点，
t(τ) 追踪 F(s, t) = 0 的根；圆管的横向方向取 (τ, 1 − τ)，使两端的小圆分别落在 s = 0 与 t = 0 内。
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy as sp

from common.errors import ConvergenceError
from common.kinematics import KinematicPoint
from config.settings import COMPUTE_CONFIG
from integrands.catalog import sunrise_catalog
from integrands.projform import FULL, ProjForm
from sunrise.boundary import CurvePoint, boundary_points, strict_transform
from sunrise.charts import SunriseChart, chart_for_pair
from sunrise.griffiths import specialized_xi
from sunrise.residues import ResidueDecomposition, residue_coordinates

logger = logging.getLogger(__name__)

# 参与核对的相邻点对；第6对是闭合证书
TUBE_PAIRS: Tuple[int, ...] = (1, 2, 3, 4, 5)


@dataclass
class TrackedPath:
    pair: int
    start: str  # 直线上的点
    end: str  # 例外除子上的点
    s: np.ndarray
    t: np.ndarray
    ds: np.ndarray
    dt: np.ndarray


def _pair_endpoints(kin: KinematicPoint, pair: int) -> Tuple[SunriseChart, CurvePoint, CurvePoint]:
    """(图卡, 直线上的点, 例外除子上的点)"""
    if pair not in TUBE_PAIRS:
        raise ValueError(f"管状积分只支持相邻点对 {TUBE_PAIRS}: {pair}")
    first, second, chart = chart_for_pair(pair)
    points = boundary_points(kin)
    ends = sorted((points[first], points[second]), key=lambda p: p.kind != "line")
    return chart, ends[0], ends[1]


def _chart_functions(kin: KinematicPoint, chart: SunriseChart):
    s, t = chart.s, chart.t
    F = strict_transform(specialized_xi(kin), chart)
    poly = sp.Poly(F, t)
    if poly.degree() != 2:
        raise ValueError(f"严格变换对 t 不是二次的: {F}")
    coefficients = [sp.lambdify(s, c, "numpy") for c in poly.all_coeffs()]
    F_s = sp.lambdify((s, t), sp.diff(F, s), "numpy")
    F_t = sp.lambdify((s, t), sp.diff(F, t), "numpy")
    return F, coefficients, F_s, F_t


def _roots(coefficients, s):
    """二次方程 A₂t² + A₁t + A₀ = 0 的两根，A₂ → 0 时仍稳定"""
    a2, a1, a0 = (np.asarray(c(s), dtype=complex) * np.ones_like(s) for c in coefficients)
    disc = np.sqrt(a1 * a1 - 4 * a2 * a0)
    return -2 * a0 / (a1 + disc), -2 * a0 / (a1 - disc)


def track_path(kin: KinematicPoint, pair: int = 3, steps: Optional[int] = None) -> TrackedPath:
    steps = steps or COMPUTE_CONFIG["tube"]["track_steps"]
    chart, start, end = _pair_endpoints(kin, pair)
    _, coefficients, F_s, F_t = _chart_functions(kin, chart)

    tau = np.linspace(0.0, 1.0, steps + 1)
    s = -0.5 + 0.5 * np.exp(1j * np.pi * tau)
    ds = 0.5j * np.pi * np.exp(1j * np.pi * tau)
    # 端点处二次项退化，求根时稍微离开端点
    nudged = -0.5 + 0.5 * np.exp(1j * np.pi * np.clip(tau, 1e-9, 1 - 1e-9))
    r1, r2 = _roots(coefficients, nudged)

    t = np.empty_like(s)
    current = complex(float(start.chart_coordinates(chart)[1]))
    for k in range(steps + 1):
        d1, d2 = abs(r1[k] - current), abs(r2[k] - current)
        current = r1[k] if (np.isnan(d2) or d1 < d2) else r2[k]
        t[k] = current
    if abs(t[-1]) > 1e-6:
        raise ConvergenceError(f"根追踪没有到达例外除子 {end.label}: t(1) = {t[-1]}")
    dt = -F_s(s, t) * ds / F_t(s, t)
    return TrackedPath(pair=pair, start=start.label, end=end.label, s=s, t=t, ds=ds, dt=dt)


def _chart_integrand(form: ProjForm, kin: KinematicPoint, chart: SunriseChart):
    """A·Ω/Ξ^k 在图卡中 ds∧dt 的系数：±A(α(s,t))·t^{1−k}/F^k"""
    if form.omega_kind != FULL:
        raise ValueError("只支持 Ω_G 型形式")
    F = strict_transform(specialized_xi(kin), chart)
    numerator = form.folded_numerator().specialize(kin).expr.xreplace(chart.substitution())
    k = form.xi_exp
    expr = chart.orientation * numerator * chart.t ** (1 - k) / F**k
    return sp.lambdify((chart.s, chart.t), expr, "numpy")


def tube_integral(
    form: ProjForm,
    kin: KinematicPoint,
    path: Optional[TrackedPath] = None,
    n_path: Optional[int] = None,
    n_circle: Optional[int] = None,
    radius: Optional[float] = None,
) -> complex:
    """(1/2πi)·∫_T form，τ 方向取中点规则，圆周方向取等距节点"""
    config = COMPUTE_CONFIG["tube"]
    n_path = n_path or config["n_path"]
    n_circle = n_circle or config["n_circle"]
    radius = radius or config["radius"]
    path = path or track_path(kin)
    _, _, chart = chart_for_pair(path.pair)
    g = _chart_integrand(form, kin, chart)

    steps = len(path.s) - 1
    tau = (np.arange(n_path) + 0.5) / n_path
    index = np.rint(tau * steps).astype(int)
    s0, t0 = path.s[index][:, None], path.t[index][:, None]
    s_tau, t_tau = path.ds[index][:, None], path.dt[index][:, None]

    phi = 2 * np.pi * np.arange(n_circle) / n_circle
    e = radius * np.exp(1j * phi)[None, :]
    normal_s, normal_t = tau[:, None], 1 - tau[:, None]

    s = s0 + e * normal_s
    t = t0 + e * normal_t
    ds_tau = s_tau + e
    dt_tau = t_tau - e
    ds_phi = 1j * e * normal_s
    dt_phi = 1j * e * normal_t
    jacobian = ds_tau * dt_phi - ds_phi * dt_tau

    weight = (1.0 / n_path) * (2 * np.pi / n_circle)
    total = np.sum(g(s, t) * jacobian) * weight
    return complex(total / (2j * np.pi))


@dataclass(frozen=True)
class TubeCheck:
    form_name: str
    pair: int
    start: str
    end: str
    tube_value: complex
    predicted: sp.Rational
    residual: float

    @property
    def ok(self) -> bool:
        return self.residual < COMPUTE_CONFIG["tube"]["tolerance"]

    def to_dict(self) -> Dict:
        return {
            "form": self.form_name,
            "pair": self.pair,
            "path": [self.start, self.end],
            "tube": {"re": repr(self.tube_value.real), "im": repr(self.tube_value.imag)},
            "predicted": str(self.predicted),
            "residual": repr(self.residual),
            "ok": self.ok,
        }


def _check_pair(
    forms: Dict[str, ProjForm],
    form_name: str,
    decomposition: ResidueDecomposition,
    kin: KinematicPoint,
    pair: int,
) -> TubeCheck:
    path = track_path(kin, pair)
    _, _, chart = chart_for_pair(pair)
    values = decomposition.point_values.get(chart.label)
    # η 与 ω 本身没有边界势
    predicted = values[path.end] - values[path.start] if values else sp.Integer(0)

    c_eta, c_omega = decomposition.a[5], decomposition.a[6]
    combination = (
        tube_integral(forms[form_name], kin, path)
        - float(c_eta) * tube_integral(forms["eta"], kin, path)
        - float(c_omega) * tube_integral(forms["omega"], kin, path)
    )
    residual = abs(combination - float(predicted))
    logger.debug(f"管状积分 {form_name} ({path.start} → {path.end}): {combination} vs {predicted}")
    return TubeCheck(form_name, pair, path.start, path.end, combination, predicted, residual)


def _decompose(form_name: str, kin: KinematicPoint):
    forms = sunrise_catalog()
    if form_name not in forms:
        raise ValueError(f"未知的形式: {form_name}")
    return forms, residue_coordinates(forms[form_name], kin)


def tube_check(form_name: str, kin: KinematicPoint, pair: int = 3) -> TubeCheck:
    """
    tube(f) − a₆·tube(η) − a₇·tube(ω) 与 G(终点) − G(起点) 比较，
    a₆, a₇ 与 G 取自精确的残差分解
    """
    forms, decomposition = _decompose(form_name, kin)
    return _check_pair(forms, form_name, decomposition, kin, pair)


def tube_checks(form_name: str, kin: KinematicPoint) -> List[TubeCheck]:
    """五对相邻点逐一核对，残差分解只做一次"""
    forms, decomposition = _decompose(form_name, kin)
    return [_check_pair(forms, form_name, decomposition, kin, pair) for pair in TUBE_PAIRS]
