"""
正则化 Eichler 积分 ∫_τ^{i∞} f(z)(z − τ)^j dz，f = Σ c_n qⁿ

n ≥ 1：∫_τ^{i∞} e^{2πinz}(z − τ)^j dz = qⁿ·j!·(i/(2πn))^{j+1}
n = 0：切向基点正则化，去掉 i∞ 处发散的多项式部分，只保留
       ∫_τ^0 (z − τ)^j dz = (−τ)^{j+1}/(j+1)
"""
import logging
from typing import Optional

import mpmath

from .eisenstein import QExpansion

logger = logging.getLogger(__name__)


def _check_power(weight: int, j: int):
    if not 0 <= j <= weight - 2:
        raise ValueError(f"要求 0 ≤ j ≤ w − 2，实际 w = {weight}, j = {j}")


def eichler_integral(
    f: QExpansion,
    tau,
    j: int = 0,
    weight: Optional[int] = None,
    ctx: Optional[mpmath.MPContext] = None,
):
    ctx = ctx or mpmath.mp
    weight = f.weight if weight is None else int(weight)
    _check_power(weight, j)
    tau = ctx.mpc(tau)
    if ctx.im(tau) <= 0:
        raise ValueError(f"要求 Im τ > 0，实际 τ = {tau}")

    q = ctx.expjpi(2 * tau)
    scale = ctx.factorial(j)
    constant = f.coefficients[0] if f.coefficients else 0
    total = ctx.mpf(constant.p) / constant.q * (-tau) ** (j + 1) / (j + 1) if constant else ctx.mpc(0)

    power = ctx.mpc(1)
    for n, c in enumerate(f.coefficients[1:], start=1):
        power *= q
        if c == 0:
            continue
        total += ctx.mpf(c.p) / c.q * power * scale * (1j / (2 * ctx.pi * n)) ** (j + 1)
    return total


def unipotent_period(f: QExpansion, tau, ctx: Optional[mpmath.MPContext] = None):
    """(2πi)²·∫_τ^{i∞} f(z)(z − τ) dz，对应权3的幺幂周期"""
    ctx = ctx or mpmath.mp
    return (2j * ctx.pi) ** 2 * eichler_integral(f, tau, 1, ctx=ctx)
