"""
sunrise余作用表：每行 = 动机侧标签 ⊗ de Rham 基上的系数向量
de Rham 基：K₁, K₂,η, F_{P1,P2}·𝕃, …, F_{P1,P6}·𝕃, I^dr_{G,G∖e₃}
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import sympy as sp

from common.kinematics import KinematicPoint, format_rational
from integrands.catalog import sunrise_catalog
from .charts import HEXAGON
from .duality import DualCoefficients, dual_coefficients
from .residues import residue_coordinates

logger = logging.getLogger(__name__)

DE_RHAM_BASIS: Tuple[str, ...] = (
    ("K1", "K2_eta")
    + tuple(f"F[P1,{p}]L" for p in HEXAGON[:5])
    + ("I_dr[G,G\\e3]",)
)

BASES = ("nu", "mu")

NU_LABELS = {
    "nu1": "I_{G_s(e1,e2^2)}",
    "nu2": "I_{G_s(e1^2,e3)}",
    "nu3": "I_{G_s(e2,e3^2)}",
}

# per(μ_i) = −log(标签参数)，见 DESIGN.md 的定向约定
MU_LABELS = {
    "mu1": "log(m3^2/m2^2)",
    "mu2": "log(m1^2/m3^2)",
    "mu3": "log(m2^2/m1^2)",
}

FIXED_ROWS = (
    ("I_G", 0),
    ("I_{G_s(e1)}", 1),
    ("I_{G\\e3}", 7),
)


def _unit(index: int) -> Tuple[sp.Rational, ...]:
    return tuple(sp.Integer(1) if k == index else sp.Integer(0) for k in range(len(DE_RHAM_BASIS)))


@dataclass(frozen=True)
class CoactionRow:
    label: str
    vector: Tuple[sp.Rational, ...]

    def to_dict(self) -> Dict:
        return {"motivic": self.label, "de_rham": [format_rational(x) for x in self.vector]}


@dataclass(frozen=True)
class CoactionTable:
    basis: str
    kin: KinematicPoint
    rows: Tuple[CoactionRow, ...]
    reduced: bool = False
    dropped: Tuple[str, ...] = ()
    duality: Optional[DualCoefficients] = field(default=None, compare=False)

    @property
    def labels(self) -> List[str]:
        return [row.label for row in self.rows]

    def to_dict(self) -> Dict:
        document = {
            "basis": self.basis,
            "kin": self.kin.to_dict(),
            "de_rham_basis": list(DE_RHAM_BASIS),
            "rows": [row.to_dict() for row in self.rows],
            "reduced": self.reduced,
        }
        if self.dropped:
            document["dropped"] = list(self.dropped)
        if self.duality is not None:
            document["duality"] = self.duality.to_dict()
        return document


def is_equal_mass(kin: KinematicPoint) -> bool:
    m1, m2, m3, _ = kin.sunrise_masses()
    return m1 == m2 == m3


def coaction_table(kin: KinematicPoint, basis: str = "mu") -> CoactionTable:
    """
    basis 为 mu（对数基）或 nu（细分图基）
    等质量的三行约化由 mu 基推出；basis=nu 时同样退回三行固定表，三个 ν 标签记在 dropped 中
    """
    if basis not in BASES:
        raise ValueError(f"不支持的基: {basis}（可选 {', '.join(BASES)}）")
    labels = NU_LABELS if basis == "nu" else MU_LABELS
    fixed = tuple(CoactionRow(label, _unit(index)) for label, index in FIXED_ROWS)

    if is_equal_mass(kin):
        # 等质量时 log(m_j²/m_k²) = log(1)，三行消失
        dropped = tuple(
            "log(1)" if basis == "mu" else label for label in labels.values()
        )
        logger.info(f"等质量运动学，余作用表约化为 {len(fixed)} 行")
        return CoactionTable(basis=basis, kin=kin, rows=fixed, reduced=True, dropped=dropped)

    forms = sunrise_catalog(choice=basis)
    decompositions = [residue_coordinates(forms[name], kin) for name in labels]
    duality = dual_coefficients(decompositions)

    rows = list(fixed)
    for i, label in enumerate(labels.values()):
        column = duality.column(i)[:5]
        vector = (sp.Integer(0), sp.Integer(0)) + tuple(column) + (sp.Integer(0),)
        rows.append(CoactionRow(label, vector))
    return CoactionTable(basis=basis, kin=kin, rows=tuple(rows), duality=duality)
