"""
sunrise三次曲线上的Griffiths降阶

对三次分子 A：
    A = Σ_j B_j ∂_jΞ + c·α₁α₂α₃,   B_j 为一次式
则
    A·Ω/Ξ² = c·α₁α₂α₃·Ω/Ξ² + (Σ_j ∂_jB_j)·Ω/Ξ + dβ,
    β = Σ_i φ_i dα_i / Ξ,   φ = B × α
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import sympy as sp

from algebra.graded_solve import GradedSolveResult, graded_solve
from algebra.polynomial import MPoly, alphas, monomials
from common.errors import DegenerateKinematicsError
from common.kinematics import KinematicPoint
from integrands.catalog import sunrise_catalog
from integrands.projform import FULL, ProjForm

logger = logging.getLogger(__name__)

X, Y, Z = alphas(3)
COMPLEMENT = MPoly(X * Y * Z)

Potential = Tuple[MPoly, MPoly, MPoly]


def jacobian_generators(xi: MPoly) -> Tuple[MPoly, MPoly, MPoly]:
    return tuple(xi.partial_derivative(v) for v in (X, Y, Z))


def is_smooth(xi: MPoly) -> bool:
    """
    三次曲线光滑且 α₁α₂α₃ 不落入Jacobian理想时，
    {α_i ∂_jΞ} ∪ {α₁α₂α₃} 张成全部三次式（秩为10）
    """
    gens = jacobian_generators(xi)
    columns = [MPoly(v) * g for v in (X, Y, Z) for g in gens] + [COMPLEMENT]
    rows = monomials([X, Y, Z], 3)
    matrix = sp.Matrix([[col.coefficient(row, [X, Y, Z]) for col in columns] for row in rows])
    return matrix.rank() == len(rows)


def cross_with_alpha(b: Potential) -> Potential:
    """φ = B × α"""
    b1, b2, b3 = b
    return (
        b2 * Z - b3 * Y,
        b3 * X - b1 * Z,
        b1 * Y - b2 * X,
    )


@dataclass(frozen=True)
class NumeratorReduction:
    """单个三次分子的分解数据"""

    numerator: MPoly
    complement_coefficient: sp.Rational
    divergence: sp.Rational
    potential: Potential
    witness: GradedSolveResult

    def verify(self, xi: MPoly) -> bool:
        """重构恒等式与图卡 α₃=1 上的 dβ 恒等式"""
        gens = jacobian_generators(xi)
        if not self.witness.verify(self.numerator, gens, [COMPLEMENT]):
            return False
        chart = {Z: 1}
        xi_c = xi.expr.xreplace(chart)
        phi1 = self.potential[0].expr.xreplace(chart)
        phi2 = self.potential[1].expr.xreplace(chart)
        d_beta = sp.diff(phi2 / xi_c, X) - sp.diff(phi1 / xi_c, Y)
        expected = (
            (self.numerator.expr - self.complement_coefficient * X * Y * Z).xreplace(chart)
            / xi_c**2
            - self.divergence / xi_c
        )
        return sp.cancel(sp.together(d_beta - expected)) == 0


def reduce_numerator(numerator: MPoly, xi: MPoly) -> NumeratorReduction:
    """xi 与 numerator 须已特化为有理系数"""
    gens = jacobian_generators(xi)
    result = graded_solve(numerator, list(gens), [COMPLEMENT], 3, variables=[X, Y, Z])
    if result.residual:
        raise DegenerateKinematicsError("not smooth: 分子不在 Jacobian 理想 + α₁α₂α₃ 中")
    b = tuple(result.combination)
    divergence = sum(
        (b[j].partial_derivative(v).expr for j, v in enumerate((X, Y, Z))), sp.Integer(0)
    )
    return NumeratorReduction(
        numerator=numerator,
        complement_coefficient=result.complement_coefficients[0],
        divergence=sp.Rational(divergence),
        potential=cross_with_alpha(b),
        witness=result,
    )


@dataclass(frozen=True)
class GriffithsReduction:
    """res(f) = c_η·res η_G + c_ω·res ω_G + d(res β)"""

    c_eta: sp.Rational
    c_omega: sp.Rational
    potential: Optional[Potential]
    form_data: Optional[NumeratorReduction] = None
    eta_data: Optional[NumeratorReduction] = None

    def verify(self, xi: MPoly) -> bool:
        if self.form_data is None:
            return True
        if not self.form_data.verify(xi) or not self.eta_data.verify(xi):
            return False
        combined = tuple(
            f - self.c_eta * e for f, e in zip(self.form_data.potential, self.eta_data.potential)
        )
        return all(p == q for p, q in zip(combined, self.potential))


@lru_cache(maxsize=1)
def sunrise_polynomials() -> Tuple[MPoly, MPoly, MPoly]:
    """(Ψ, Ξ, η_G 的折叠分子)，参数保持符号"""
    forms = sunrise_catalog(choice="nu")
    eta = forms["eta"]
    return eta.psi, eta.xi, eta.folded_numerator()


@lru_cache(maxsize=256)
def _eta_reduction(xi_text: str) -> NumeratorReduction:
    xi = MPoly.from_string(xi_text)
    return reduce_numerator(sunrise_polynomials()[2], xi)


def specialized_xi(kin: KinematicPoint) -> MPoly:
    return sunrise_polynomials()[1].specialize(kin)


def griffiths_reduce(form: ProjForm, kin: KinematicPoint) -> GriffithsReduction:
    if form.omega_kind != FULL:
        raise ValueError("只支持 Ω_G 型形式")
    if form.psi_exp > 0:
        raise ValueError(f"Ψ 不能出现在分母中 (a = {form.psi_exp})")
    xi = specialized_xi(kin)
    numerator = form.folded_numerator().specialize(kin)

    if form.xi_exp == 1:
        if numerator.degree([X, Y, Z]) > 0:
            raise ValueError("一阶极点形式的分子必须是常数")
        constant = numerator.evaluate({})
        return GriffithsReduction(c_eta=sp.Integer(0), c_omega=constant, potential=None)

    if form.xi_exp != 2:
        raise ValueError(f"不支持的极点阶数: {form.xi_exp}")

    if not is_smooth(xi):
        raise DegenerateKinematicsError(f"not smooth: {kin.to_dict()}")

    eta_data = _eta_reduction(xi.to_string())
    form_data = reduce_numerator(numerator, xi)
    if eta_data.complement_coefficient == 0:
        raise DegenerateKinematicsError("degenerate kinematics: η_G 的补空间系数为0")

    c_eta = form_data.complement_coefficient / eta_data.complement_coefficient
    c_omega = form_data.divergence - c_eta * eta_data.divergence
    potential = tuple(
        f - c_eta * e for f, e in zip(form_data.potential, eta_data.potential)
    )
    logger.debug(f"Griffiths降阶 {form.name}: c_η={c_eta}, c_ω={c_omega}")
    return GriffithsReduction(
        c_eta=c_eta,
        c_omega=c_omega,
        potential=potential,
        form_data=form_data,
        eta_data=eta_data,
    )
