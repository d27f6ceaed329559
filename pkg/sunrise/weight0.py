"""
权0检查：ω₀ = m₃⁴·α₃⁴·(α₁dα₂ − α₂dα₁)/Ξ² 限制到 e₃ 上的例外除子
图卡 α₃ = 1, α₁ = u, α₂ = uv 中 α₁dα₂ − α₂dα₁ = u²dv，令 u = 0 应得 dv/(1+v)²
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

import sympy as sp

from algebra.polynomial import alpha
from common.kinematics import KinematicPoint
from integrands.catalog import sunrise_catalog

logger = logging.getLogger(__name__)

U, V = sp.symbols("u v")
EXPECTED = 1 / (1 + V) ** 2


@dataclass(frozen=True)
class Weight0Result:
    holds: bool
    witness: sp.Expr  # dv 的系数

    def to_dict(self) -> Dict:
        return {"holds": self.holds, "witness": f"({sp.sstr(self.witness)}) dv"}


def weight0_check(kin: Optional[KinematicPoint] = None) -> Weight0Result:
    """kin 为 None 时保持参数为符号"""
    form = sunrise_catalog(choice="all")["omega0"]
    _, i, j = form.omega_kind
    chart = {alpha(1): U, alpha(2): U * V, alpha(3): sp.Integer(1)}

    # pair 形式 α_i dα_j − α_j dα_i 的拉回
    a_i, a_j = chart[alpha(i)], chart[alpha(j)]
    pair = sp.expand(a_i * sp.diff(a_j, V) - a_j * sp.diff(a_i, V))
    pair_du = sp.expand(a_i * sp.diff(a_j, U) - a_j * sp.diff(a_i, U))
    if pair_du != 0:
        raise RuntimeError(f"图卡拉回出现 du 分量: {pair_du}")

    scalar = form.sign * form.numerator.expr / form.xi.expr**form.xi_exp
    if kin is not None:
        scalar = scalar.xreplace(kin.symbols)
    restricted = sp.cancel(sp.together(scalar.xreplace(chart) * pair))
    witness = sp.cancel(restricted.xreplace({U: 0}))

    holds = sp.cancel(witness - EXPECTED) == 0
    if not holds:
        logger.info(f"权0检查不成立，限制为 {witness}")
    return Weight0Result(holds=bool(holds), witness=witness)
