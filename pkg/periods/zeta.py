"""
格 ℤ + τℤ 上的 Weierstrass ζ 函数（q 级数）
ζ(z) = η(1)·z + πi(q_z + 1)/(q_z − 1) + 2πi Σ [qⁿ/q_z/(1 − qⁿ/q_z) − qⁿq_z/(1 − qⁿq_z)]
η(1) = −8π²𝔾₂(τ)，η(τ) = τ·η(1) − 2πi
"""
import logging
from typing import Optional

import mpmath

from common.errors import ConvergenceError, DegenerateKinematicsError
from config.settings import COMPUTE_CONFIG
from .eisenstein import g2, reduce_to_fundamental_domain

logger = logging.getLogger(__name__)


def quasi_periods(tau, ctx: Optional[mpmath.MPContext] = None):
    """(η(1), η(τ))，满足 Legendre 关系 τ·η(1) − η(τ) = 2πi"""
    ctx = ctx or mpmath.mp
    tau = ctx.mpc(tau)
    eta_one = -8 * ctx.pi**2 * g2(tau, ctx)
    return eta_one, tau * eta_one - 2j * ctx.pi


def _series(tau, z, eta_one, ctx):
    q = ctx.expjpi(2 * tau)
    qz = ctx.expjpi(2 * z)
    if abs(qz - 1) < ctx.eps * 64:
        raise DegenerateKinematicsError(f"ζ 在格点处有极点: z = {z}")
    total = eta_one * z + 1j * ctx.pi * (qz + 1) / (qz - 1)
    qn = ctx.mpc(1)
    for _ in range(COMPUTE_CONFIG["q_series_max_terms"]):
        qn *= q
        a, b = qn / qz, qn * qz
        term = 2j * ctx.pi * (a / (1 - a) - b / (1 - b))
        total += term
        if abs(term) < ctx.eps * (1 + abs(total)):
            return total
    raise ConvergenceError(f"ζ 的q级数未收敛: τ = {tau}, z = {z}")


def weierstrass_zeta(tau, z, ctx: Optional[mpmath.MPContext] = None):
    """
    τ 先约化到基本域：ℤ + γτℤ = (cτ+d)⁻¹(ℤ + τℤ)，故 ζ_τ(z) = ζ_{γτ}(z/(cτ+d))/(cτ+d)；
    再把 z 平移到 |Im z| ≤ Im τ / 2 的带内，用准周期性补回
    """
    ctx = ctx or mpmath.mp
    tau, z = ctx.mpc(tau), ctx.mpc(z)
    if ctx.im(tau) <= 0:
        raise ValueError(f"要求 Im τ > 0，实际 τ = {tau}")
    reduced, (_, _, c, d) = reduce_to_fundamental_domain(tau, ctx)
    factor = c * tau + d
    w = z / factor
    eta_one, eta_tau = quasi_periods(reduced, ctx)
    n = int(ctx.nint(ctx.im(w) / ctx.im(reduced)))
    return (_series(reduced, w - n * reduced, eta_one, ctx) + n * eta_tau) / factor
