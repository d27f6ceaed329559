"""
单值周期矩阵 P̄⁻¹P
- 椭圆情形：2×2 的 f_{r,s}(τ, λ)，以及带两个标记点的 3×3 不完全周期矩阵
- 例子：对数 [[2πi, 0], [log x, 1]] 与双对数的幺幂周期矩阵、Bloch–Wigner 函数
"""
import logging
from typing import Optional

import mpmath

from common.errors import DegenerateKinematicsError
from .eisenstein import g2_star
from .zeta import weierstrass_zeta

logger = logging.getLogger(__name__)


def _conj_matrix(ctx, P):
    return ctx.matrix([[ctx.conj(P[i, j]) for j in range(P.cols)] for i in range(P.rows)])


def sv_from_period_matrix(P, ctx: Optional[mpmath.MPContext] = None):
    """P̄⁻¹P；对任意有理可逆 Q 有 sv(QP) = sv(P)"""
    ctx = ctx or mpmath.mp
    P = ctx.matrix(P)
    if P.rows != P.cols:
        raise ValueError("周期矩阵必须是方阵")
    conj = _conj_matrix(ctx, P)
    if abs(ctx.det(conj)) < ctx.eps:
        raise ZeroDivisionError("周期矩阵奇异")
    return ctx.inverse(conj) * P


def sv_elliptic_matrix(tau, lam, ctx: Optional[mpmath.MPContext] = None):
    """
    f₁₁ = −(λ/λ̄)·8π·Imτ·conj(𝔾₂*)
    f₁₂ = (λλ̄)⁻¹·(64π²Im²τ·|𝔾₂*|² − 1)/(4π·Imτ)
    f₂₁ = −λλ̄·4π·Imτ
    f₂₂ = (λ̄/λ)·8π·Imτ·𝔾₂*
    """
    ctx = ctx or mpmath.mp
    tau, lam = ctx.mpc(tau), ctx.mpc(lam)
    if lam == 0:
        raise ValueError("λ 不能为0")
    y = ctx.im(tau)
    g = g2_star(tau, ctx)
    lam_bar = ctx.conj(lam)
    pi = ctx.pi
    norm = lam * lam_bar
    return ctx.matrix(
        [
            [
                -(lam / lam_bar) * 8 * pi * y * ctx.conj(g),
                (64 * pi**2 * y**2 * abs(g) ** 2 - 1) / (4 * pi * y) / norm,
            ],
            [-norm * 4 * pi * y, (lam_bar / lam) * 8 * pi * y * g],
        ]
    )


def elliptic_period_matrix(tau, lam, ctx: Optional[mpmath.MPContext] = None):
    """由 (τ, λ) 重建 [[ω₁, η₁], [ω₂, η₂]]，η 满足 Legendre 与 Fricke 关系"""
    ctx = ctx or mpmath.mp
    tau, lam = ctx.mpc(tau), ctx.mpc(lam)
    two_pi_i = 2j * ctx.pi
    omega1 = two_pi_i * lam
    omega2 = tau * omega1
    eta1 = -2 * two_pi_i**2 * (g2_star(tau, ctx) - 1 / (8 * ctx.pi * ctx.im(tau))) / omega1
    eta2 = (omega2 * eta1 + two_pi_i) / omega1
    return ctx.matrix([[omega1, eta1], [omega2, eta2]])


def incomplete_period_matrix(tau, z1, z2, lam, ctx: Optional[mpmath.MPContext] = None):
    """
    第三行为两标记点之间的不完全积分：
    u = ω₁(z₁ − z₂), v = −(ζ(z₁) − ζ(z₂))/ω₁（ζ 取格 ℤ + τℤ）
    """
    ctx = ctx or mpmath.mp
    base = elliptic_period_matrix(tau, lam, ctx)
    omega1 = base[0, 0]
    u = omega1 * (ctx.mpc(z1) - ctx.mpc(z2))
    v = -(weierstrass_zeta(tau, z1, ctx) - weierstrass_zeta(tau, z2, ctx)) / omega1
    return ctx.matrix(
        [
            [base[0, 0], base[0, 1], 0],
            [base[1, 0], base[1, 1], 0],
            [u, v, 1],
        ]
    )


def sv_incomplete_pair(tau, z1, z2, lam, ctx: Optional[mpmath.MPContext] = None):
    """
    (f₃₁, f₃₂) = (u − ū·f₁₁ − v̄·f₂₁, v − ū·f₁₂ − v̄·f₂₂)
    """
    ctx = ctx or mpmath.mp
    z1, z2 = ctx.mpc(z1), ctx.mpc(z2)
    if z1 == z2:
        return ctx.mpc(0), ctx.mpc(0)
    f = sv_elliptic_matrix(tau, lam, ctx)
    omega1 = 2j * ctx.pi * ctx.mpc(lam)
    u = omega1 * (z1 - z2)
    v = -(weierstrass_zeta(tau, z1, ctx) - weierstrass_zeta(tau, z2, ctx)) / omega1
    u_bar, v_bar = ctx.conj(u), ctx.conj(v)
    f31 = u - u_bar * f[0, 0] - v_bar * f[1, 0]
    f32 = v - u_bar * f[0, 1] - v_bar * f[1, 1]
    return f31, f32


def log_period_matrix(x, ctx: Optional[mpmath.MPContext] = None):
    ctx = ctx or mpmath.mp
    return ctx.matrix([[2j * ctx.pi, 0], [ctx.log(x), 1]])


def dilog_period_matrix(x, ctx: Optional[mpmath.MPContext] = None):
    """[[1, 0, 0], [Li₁(x), 2πi, 0], [Li₂(x), 2πi·log x, (2πi)²]]，Li₁(x) = −log(1−x)"""
    ctx = ctx or mpmath.mp
    x = ctx.mpc(x)
    if x == 0 or x == 1:
        raise DegenerateKinematicsError(f"双对数周期矩阵在 x = {x} 处奇异")
    two_pi_i = 2j * ctx.pi
    return ctx.matrix(
        [
            [1, 0, 0],
            [-ctx.log(1 - x), two_pi_i, 0],
            [ctx.polylog(2, x), two_pi_i * ctx.log(x), two_pi_i**2],
        ]
    )


def bloch_wigner(x, ctx: Optional[mpmath.MPContext] = None):
    """D(x) = Im Li₂(x) + arg(1 − x)·log|x|"""
    ctx = ctx or mpmath.mp
    x = ctx.mpc(x)
    return ctx.im(ctx.polylog(2, x)) + ctx.arg(1 - x) * ctx.log(abs(x))


def sv_dilog_corner(x, ctx: Optional[mpmath.MPContext] = None):
    """
    (2πi)²·sv[2,0] = Li₂ − conj Li₂ − conj(log x)·(Li₁ − conj Li₁)
                  = 2i·D(x) + 2·arg(x)·arg(1 − x)
    """
    ctx = ctx or mpmath.mp
    sv = sv_from_period_matrix(dilog_period_matrix(x, ctx), ctx)
    return sv[2, 0] * (2j * ctx.pi) ** 2


def transform_arguments(gamma, tau, z1, z2, lam, ctx: Optional[mpmath.MPContext] = None):
    """γ 作用：(τ, z, λ) ↦ (γτ, z/(cτ+d), λ(cτ+d))，f_{r,s} 与 f₃₁, f₃₂ 在其下不变"""
    ctx = ctx or mpmath.mp
    a, b, c, d = gamma
    tau = ctx.mpc(tau)
    factor = c * tau + d
    return (a * tau + b) / factor, ctx.mpc(z1) / factor, ctx.mpc(z2) / factor, ctx.mpc(lam) * factor
