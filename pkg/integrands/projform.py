"""
射影微分形式 sign·A·Ω_G/(Ψ^a Ξ^b) 与边细分拉回
Ω_G 不展开成楔积，只保留标量前因子；omega_kind 为 ("full",) 或 ("pair", i, j)，
后者表示 α_i dα_j − α_j dα_i
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Tuple

import sympy as sp

from algebra.polynomial import MPoly, alpha
from common.errors import DimensionParityError
from graphs.feynman_graph import FeynmanGraph, MandelstamDictionary
from graphs.subdivision import SubdivisionSpec, subdivide
from graphs.symanzik import symanzik_first, symanzik_second

logger = logging.getLogger(__name__)

FULL = ("full",)


def omega_weight(graph: FeynmanGraph, omega_kind: Tuple) -> int:
    if omega_kind[0] == "full":
        return graph.n_edges
    if omega_kind[0] == "pair":
        return 2
    raise ValueError(f"未知的omega类型: {omega_kind}")


@dataclass(frozen=True)
class ProjForm:
    graph: FeynmanGraph
    numerator: MPoly
    psi_exp: int
    xi_exp: int
    sign: int = 1
    omega_kind: Tuple = FULL
    name: str = ""
    mandelstam: Optional[MandelstamDictionary] = field(default=None, compare=False)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign 必须为 ±1: {self.sign}")
        object.__setattr__(self, "omega_kind", tuple(self.omega_kind))
        if not self.numerator.is_homogeneous(self.graph.alphas()):
            raise ValueError(f"分子不是α的齐次多项式: {self.numerator}")
        if not self.is_homogeneous():
            h = self.graph.loop_number
            raise ValueError(
                "形式不齐次: "
                f"deg(A)+w = {self.numerator_degree + self.weight} ≠ "
                f"{self.psi_exp}·{h} + {self.xi_exp}·{h + 1}"
            )

    # ---------- 齐次性 ----------
    @property
    def numerator_degree(self) -> int:
        return max(self.numerator.degree(self.graph.alphas()), 0)

    @property
    def weight(self) -> int:
        return omega_weight(self.graph, self.omega_kind)

    def is_homogeneous(self) -> bool:
        h = self.graph.loop_number
        if self.numerator.is_zero():
            return True
        return self.numerator_degree + self.weight == self.psi_exp * h + self.xi_exp * (h + 1)

    # ---------- 多项式 ----------
    @cached_property
    def psi(self) -> MPoly:
        return symanzik_first(self.graph)

    @cached_property
    def xi(self) -> MPoly:
        return symanzik_second(self.graph, self.mandelstam)

    def folded_numerator(self) -> MPoly:
        """sign·A·Ψ^{−a}（要求 a ≤ 0）"""
        if self.psi_exp > 0:
            raise ValueError(f"Ψ 仍在分母中 (a = {self.psi_exp})")
        return self.sign * self.numerator * self.psi ** (-self.psi_exp)

    def scalar(self) -> sp.Expr:
        """Ω 的标量前因子 sign·A·Ψ^{−a}·Ξ^{−b}"""
        return (
            self.sign
            * self.numerator.expr
            * self.psi.expr ** (-self.psi_exp)
            * self.xi.expr ** (-self.xi_exp)
        )

    def chart_scalar(self, j: int) -> sp.Expr:
        """仿射图卡 α_j = 1 上 dα_1…d̂α_j…dα_N 的系数"""
        if self.omega_kind != FULL:
            raise ValueError("pair 型形式没有顶次形式的图卡表示")
        orientation = (-1) ** (j - 1)
        return orientation * self.scalar().subs(alpha(j), 1)

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "graph": self.graph.to_dict(),
            "numerator": self.numerator.to_string(),
            "psi_exp": self.psi_exp,
            "xi_exp": self.xi_exp,
            "sign": self.sign,
            "omega_kind": list(self.omega_kind),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "ProjForm":
        graph = FeynmanGraph.from_dict(data["graph"])
        kind = data.get("omega_kind", ["full"])
        return cls(
            graph=graph,
            numerator=MPoly.from_string(data["numerator"]),
            psi_exp=int(data["psi_exp"]),
            xi_exp=int(data["xi_exp"]),
            sign=int(data.get("sign", 1)),
            omega_kind=(kind[0], *map(int, kind[1:])),
            name=data.get("name", ""),
        )


@dataclass(frozen=True)
class SubdivisionExponents:
    """细分积分核中 Ψ^{z₁} Ξ^{z₂} 的指数"""

    z1: int
    z2: int
    K: int

    @classmethod
    def compute(cls, loop_number: int, dimension_shift: int, total: int) -> "SubdivisionExponents":
        h, d = loop_number, dimension_shift
        if ((h + 1) * d) % 2 or (h * d) % 2:
            raise DimensionParityError(f"h = {h}, d' − d = {d}")
        return cls(z1=total - (h + 1) * d // 2, z2=d * h // 2 - total, K=total)


def integrand_exponents(graph: FeynmanGraph, d: int) -> Tuple[int, int]:
    """Ω/Ψ^{d/2}·(Ψ/Ξ)^{N−hd/2} 中 (a, b)"""
    n, h = graph.n_edges, graph.loop_number
    if d % 2:
        raise DimensionParityError(f"d = {d}")
    b = n - h * d // 2
    a = d // 2 - b
    return a, b


def feynman_integrand(
    graph: FeynmanGraph, d: int, mandelstam: Optional[MandelstamDictionary] = None
) -> ProjForm:
    graph.require_connected()
    if graph.n_edges < 2:
        raise ValueError(f"退化积分：N = {graph.n_edges}，积分区域不是正维单纯形")
    a, b = integrand_exponents(graph, d)
    return ProjForm(
        graph=graph,
        numerator=MPoly(1),
        psi_exp=a,
        xi_exp=b,
        name=f"omega_d{d}",
        mandelstam=mandelstam,
    )


def subdivision_pullback(
    graph: FeynmanGraph,
    spec: SubdivisionSpec,
    d_sub: int,
    d_graph: int,
    mandelstam: Optional[MandelstamDictionary] = None,
) -> ProjForm:
    """
    G_{s(I)} 的积分核沿纤维积分后在 G 上的代表：
    (−1)^K·Π α_i^{k_i}·Ψ^{z₁}Ξ^{z₂}·ω_G(d_G)
    """
    base = feynman_integrand(graph, d_graph, mandelstam)
    exps = SubdivisionExponents.compute(graph.loop_number, d_sub - d_graph, spec.total)
    numerator = MPoly(sp.Mul(*(alpha(i) ** k for i, k in enumerate(spec.counts, start=1))))
    form = ProjForm(
        graph=graph,
        numerator=numerator,
        psi_exp=base.psi_exp - exps.z1,
        xi_exp=base.xi_exp - exps.z2,
        sign=(-1) ** exps.K,
        name=f"pullback{spec.counts}",
        mandelstam=mandelstam,
    )
    logger.debug(f"细分拉回: K={exps.K}, z1={exps.z1}, z2={exps.z2}")
    return form


def verify_pullback_identity(graph: FeynmanGraph, d_sub: int, d_graph: int) -> bool:
    """
    细分最后一条边，代入 α_N ↦ yα_N, α_{N+1} ↦ (1−y)α_N，检查
    ρ*ω_{G_{s(e)}} = −α_N·Ψ^{z₁}Ξ^{z₂}·ω_G ∧ dy（图卡 α_1 = 1 上的有理函数恒等式）
    """
    n = graph.n_edges
    if n < 2:
        raise ValueError("需要至少两条边")
    spec = SubdivisionSpec.for_graph(graph, {n: 1})
    sub_graph = subdivide(graph, spec)
    sub_form = feynman_integrand(sub_graph, d_sub)
    base = feynman_integrand(graph, d_graph)
    exps = SubdivisionExponents.compute(graph.loop_number, d_sub - d_graph, 1)

    y = sp.Symbol("y")
    a_n, a_next = alpha(n), alpha(n + 1)
    rho = {a_n: y * a_n, a_next: (1 - y) * a_n}

    # 图卡 α_1 = 1 中 (α_N, α_{N+1}) 对 (α_N, y) 的Jacobian
    jacobian = sp.Matrix([[rho[a_n], rho[a_next]]]).jacobian([a_n, y]).det()
    lhs = jacobian * sub_form.scalar().xreplace(rho)
    rhs = (
        -a_n
        * base.psi.expr ** exps.z1
        * base.xi.expr ** exps.z2
        * base.scalar()
    )
    difference = sp.cancel(sp.together((lhs - rhs).subs(alpha(1), 1)))
    return difference == 0
