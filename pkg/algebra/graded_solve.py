"""
分次线性求解：target = Σ B_i·gen_i + Σ c_i·comp_i
在单项式基上做精确有理线性代数（sympy Matrix）
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import sympy as sp

from common.kinematics import KinematicPoint
from .polynomial import MPoly, monomials, sort_variables

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedSolveResult:
    """分次求解结果；residual为True表示无解"""

    combination: List[MPoly] = field(default_factory=list)
    complement_coefficients: List[sp.Rational] = field(default_factory=list)
    residual: bool = False
    variables: List[sp.Symbol] = field(default_factory=list)

    def reconstruct(self, generators: Sequence[MPoly], complement: Sequence[MPoly]) -> MPoly:
        total = MPoly(0)
        for b, g in zip(self.combination, generators):
            total = total + b * g
        for c, h in zip(self.complement_coefficients, complement):
            total = total + c * h
        return total

    def verify(self, target: MPoly, generators: Sequence[MPoly], complement: Sequence[MPoly]) -> bool:
        """重构恒等式精确展开检查"""
        if self.residual:
            return False
        return self.reconstruct(generators, complement) == target


def _unknown_layout(generators, degree, variables):
    layout = []
    for index, gen in enumerate(generators):
        d = degree - gen.degree(variables)
        for mono in monomials(variables, d):
            layout.append((index, mono))
    return layout


def graded_solve(
    target: MPoly,
    generators: Sequence[MPoly],
    complement: Sequence[MPoly],
    degree: int,
    kin: Optional[KinematicPoint] = None,
    variables: Optional[Sequence[sp.Symbol]] = None,
) -> GradedSolveResult:
    """
    在给定次数的单项式基上求解。
    自由参数取0；不相容时返回 residual=True 而不抛异常。
    """
    if kin is not None:
        target = target.specialize(kin)
        generators = [g.specialize(kin) for g in generators]
        complement = [c.specialize(kin) for c in complement]

    if variables is None:
        pool = set(target.alpha_variables)
        for poly in list(generators) + list(complement):
            pool.update(poly.alpha_variables)
        variables = sort_variables(pool)
    variables = list(variables)

    for poly in [target] + list(generators) + list(complement):
        if poly.parameters:
            raise ValueError(f"存在未特化的参数: {poly.parameters}")
        if not poly.is_homogeneous(variables):
            raise ValueError(f"输入不是齐次多项式: {poly}")

    if not target.is_zero() and target.degree(variables) != degree:
        raise ValueError(f"次数不匹配: target次数 {target.degree(variables)} ≠ {degree}")
    for comp in complement:
        if comp.degree(variables) != degree:
            raise ValueError(f"次数不匹配: 补空间元素 {comp} 的次数不是 {degree}")

    layout = _unknown_layout(generators, degree, variables)
    rows = monomials(variables, degree)
    columns = [mono * generators[index] for index, mono in layout] + list(complement)

    matrix = sp.Matrix(
        [[col.coefficient(row, variables) for col in columns] for row in rows]
    )
    rhs = sp.Matrix([target.coefficient(row, variables) for row in rows])

    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        logger.debug(f"分次求解无解: degree={degree}, 未知数={len(columns)}")
        return GradedSolveResult(residual=True, variables=variables)

    solution = solution.subs({p: 0 for p in params})
    combination = [MPoly(0) for _ in generators]
    for (index, mono), value in zip(layout, solution[: len(layout)]):
        if value != 0:
            combination[index] = combination[index] + value * mono
    coefficients = [sp.Rational(v) for v in solution[len(layout):]]

    return GradedSolveResult(
        combination=combination,
        complement_coefficients=coefficients,
        residual=False,
        variables=variables,
    )
