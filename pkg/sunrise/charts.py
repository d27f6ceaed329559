"""
逐次爆破的仿射图卡
旗 I_1 ⊂ … ⊂ I_r = S 与选择 j_k ∈ I_k∖I_{k−1}：
    α_i = β_i · Π_{k: i∈I_k, j_k≠i} β_{j_k}
逆映射 β_i = α_i / α_{j_m}，m 为满足 i∈I_m 且 j_m≠i 的最小下标；i = j_r 时 β_i = α_i
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

import sympy as sp

from algebra.polynomial import alpha

logger = logging.getLogger(__name__)


def beta(index: int) -> sp.Symbol:
    return sp.Symbol(f"b{index}")


@dataclass(frozen=True)
class BlowupChart:
    n: int
    flag: Tuple[FrozenSet[int], ...]
    choice: Tuple[int, ...]

    def __post_init__(self):
        flag = tuple(frozenset(part) for part in self.flag)
        object.__setattr__(self, "flag", flag)
        object.__setattr__(self, "choice", tuple(self.choice))
        full = frozenset(range(1, self.n + 1))
        if not flag or flag[-1] != full:
            raise ValueError(f"旗的最后一项必须是全集 {sorted(full)}")
        if len(self.choice) != len(flag):
            raise ValueError("选择的长度必须与旗的长度一致")
        previous: FrozenSet[int] = frozenset()
        for part, j in zip(flag, self.choice):
            if not previous < part:
                raise ValueError(f"旗必须严格递增: {sorted(previous)} ⊄ {sorted(part)}")
            if j not in part - previous:
                raise ValueError(f"选择 {j} 不在 I_k∖I_(k−1) = {sorted(part - previous)} 中")
            previous = part

    @property
    def label(self) -> str:
        parts = ",".join("{" + ",".join(map(str, sorted(p))) + "}" for p in self.flag)
        return f"F=({parts}) c={self.choice}"

    def substitution(self, dehomogenize: bool = False) -> Dict[sp.Symbol, sp.Expr]:
        """α_i ↦ β 的单项式；dehomogenize=True 时令 β_{j_r} = 1"""
        mapping = {}
        for i in range(1, self.n + 1):
            factors = [beta(i)]
            for part, j in zip(self.flag, self.choice):
                if i in part and j != i:
                    factors.append(beta(j))
            mapping[alpha(i)] = sp.Mul(*factors)
        if dehomogenize:
            top = {beta(self.choice[-1]): 1}
            mapping = {k: v.xreplace(top) for k, v in mapping.items()}
        return mapping

    def inverse(self) -> Dict[sp.Symbol, sp.Expr]:
        """β_i ↦ α 的比值（在 α_{j_m} ≠ 0 的开集上）"""
        mapping = {}
        for i in range(1, self.n + 1):
            denominator = None
            for part, j in zip(self.flag, self.choice):
                if i in part and j != i:
                    denominator = alpha(j)
                    break
            mapping[beta(i)] = alpha(i) if denominator is None else alpha(i) / denominator
        return mapping

    def exceptional_coordinates(self) -> List[sp.Symbol]:
        """除最后一级外的选择坐标：β_{j_k}=0 为第k个例外除子"""
        return [beta(j) for j in self.choice[:-1]]


@dataclass(frozen=True)
class SunriseChart:
    """
    ℙ² 在顶点 e_c 爆破后的图卡：α_c = 1, α_a = s·t, α_b = t
    s = 0 是直线 α_a = 0 的严格变换，t = 0 是 e_c 上的例外除子
    """

    c: int
    a: int
    b: int

    @property
    def blowup(self) -> BlowupChart:
        return BlowupChart(3, (frozenset({self.a, self.b}), frozenset({1, 2, 3})), (self.b, self.c))

    @property
    def s(self) -> sp.Symbol:
        return beta(self.a)

    @property
    def t(self) -> sp.Symbol:
        return beta(self.b)

    def substitution(self) -> Dict[sp.Symbol, sp.Expr]:
        return self.blowup.substitution(dehomogenize=True)

    @property
    def orientation(self) -> int:
        """图卡中 Ω_G = ±dα_a∧dα_b，符号为置换 (c, a, b) 的符号"""
        return int(sp.LeviCivita(self.c, self.a, self.b))

    @property
    def label(self) -> str:
        return f"A(c={self.c},a={self.a},b={self.b})"


# 六个边界点沿六边形排列：Q1..Q6 = P2, P3, P4, P5, P6, P1
HEXAGON: Tuple[str, ...] = ("P2", "P3", "P4", "P5", "P6", "P1")

# 相邻两点 (Q_k, Q_{k+1}) 共同所在的图卡；最后一项闭合六边形
HEXAGON_CHARTS: Tuple[SunriseChart, ...] = (
    SunriseChart(c=2, a=3, b=1),
    SunriseChart(c=2, a=1, b=3),
    SunriseChart(c=3, a=1, b=2),
    SunriseChart(c=3, a=2, b=1),
    SunriseChart(c=1, a=2, b=3),
    SunriseChart(c=1, a=3, b=2),
)


def chart_for_pair(k: int) -> Tuple[str, str, SunriseChart]:
    """第k对相邻点（1起始，6为闭合对）"""
    if not 1 <= k <= 6:
        raise ValueError(f"相邻点对编号越界: {k}")
    first = HEXAGON[k - 1]
    second = HEXAGON[k % 6]
    return first, second, HEXAGON_CHARTS[k - 1]


def compose_check(chart: BlowupChart) -> bool:
    """逆映射与代换复合为恒等"""
    forward = chart.substitution()
    backward = chart.inverse()
    for i in range(1, chart.n + 1):
        image = sp.cancel(backward[beta(i)].xreplace(forward))
        if sp.simplify(image - beta(i)) != 0:
            return False
    return True
