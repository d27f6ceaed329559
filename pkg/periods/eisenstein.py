"""
q展开：𝔾₂ 与其实解析修正 𝔾₂*、E₄、E₆、判别式 Δ
约定 𝔾₂(τ) = −1/24 + Σ σ₁(n) qⁿ, q = e^{2πiτ}
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import mpmath
import sympy as sp

from common.errors import ConvergenceError
from config.settings import COMPUTE_CONFIG

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QExpansion:
    """Σ c_n qⁿ（n = 0..N），系数为有理数"""

    coefficients: Tuple[sp.Rational, ...]
    weight: int

    @classmethod
    def from_list(cls, coefficients: Sequence, weight: int) -> "QExpansion":
        return cls(tuple(sp.Rational(c) for c in coefficients), int(weight))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, tau, ctx: Optional[mpmath.MPContext] = None):
        ctx = ctx or mpmath.mp
        q = ctx.expjpi(2 * ctx.mpc(tau))
        total = ctx.mpc(0)
        power = ctx.mpc(1)
        for c in self.coefficients:
            if c != 0:
                total += ctx.mpf(c.p) / c.q * power
            power *= q
        return total

    def truncation_bound(self, tau, ctx: Optional[mpmath.MPContext] = None):
        """|q|^{N+1}·max|c_n| 作为截断误差的量级"""
        ctx = ctx or mpmath.mp
        q_abs = abs(ctx.expjpi(2 * ctx.mpc(tau)))
        largest = max((abs(c) for c in self.coefficients), default=0)
        return q_abs ** (self.order + 1) * ctx.mpf(largest.p) / largest.q if largest else ctx.mpf(0)

    def __add__(self, other: "QExpansion") -> "QExpansion":
        n = min(self.order, other.order) + 1
        return QExpansion(
            tuple(a + b for a, b in zip(self.coefficients[:n], other.coefficients[:n])),
            self.weight,
        )

    def scale(self, factor) -> "QExpansion":
        return QExpansion(tuple(sp.Rational(factor) * c for c in self.coefficients), self.weight)

    def to_dict(self):
        return {"weight": self.weight, "coefficients": [str(c) for c in self.coefficients]}


@lru_cache(maxsize=64)
def _sigma(k: int, n: int) -> int:
    return int(sp.divisor_sigma(n, k))


def _eisenstein(constant: int, factor: int, k: int, order: int, weight: int) -> QExpansion:
    coefficients = [sp.Integer(constant)] + [sp.Integer(factor * _sigma(k, n)) for n in range(1, order + 1)]
    return QExpansion(tuple(coefficients), weight)


def g2_expansion(order: int) -> QExpansion:
    coefficients = [sp.Rational(-1, 24)] + [sp.Integer(_sigma(1, n)) for n in range(1, order + 1)]
    return QExpansion(tuple(coefficients), 2)


def e4_expansion(order: int) -> QExpansion:
    return _eisenstein(1, 240, 3, order, 4)


def e6_expansion(order: int) -> QExpansion:
    return _eisenstein(1, -504, 5, order, 6)


def _multiply(a: Sequence[int], b: Sequence[int], order: int):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def delta_expansion(order: int) -> QExpansion:
    """Δ = (E₄³ − E₆²)/1728，整系数 τ(n)"""
    e4 = [int(c) for c in e4_expansion(order).coefficients]
    e6 = [int(c) for c in e6_expansion(order).coefficients]
    cube = _multiply(_multiply(e4, e4, order), e4, order)
    square = _multiply(e6, e6, order)
    coefficients = [sp.Integer((x - y) // 1728) for x, y in zip(cube, square)]
    return QExpansion(tuple(coefficients), 12)


def _require_upper(tau, ctx):
    if ctx.im(tau) <= 0:
        raise ValueError(f"要求 Im τ > 0，实际 τ = {tau}")


def _g2_series(tau, ctx):
    """自适应截断：直到 σ₁(n)|q|ⁿ 低于工作精度"""
    q = ctx.expjpi(2 * tau)
    eps = ctx.eps
    total = ctx.mpc(-1) / 24
    power = ctx.mpc(1)
    for n in range(1, COMPUTE_CONFIG["q_series_max_terms"] + 1):
        power *= q
        term = _sigma(1, n) * power
        total += term
        if abs(term) < eps * (1 + abs(total)) and n > 2:
            return total
    raise ConvergenceError(f"𝔾₂ 的q级数未收敛: τ = {tau}")


def g2(tau, ctx: Optional[mpmath.MPContext] = None):
    """
    先约化到基本域再求和：𝔾₂*(γτ) = (cτ+d)²·𝔾₂*(τ)，
    𝔾₂ = 𝔾₂* − 1/(8π Im τ)
    """
    ctx = ctx or mpmath.mp
    tau = ctx.mpc(tau)
    _require_upper(tau, ctx)
    reduced, (_, _, c, d) = reduce_to_fundamental_domain(tau, ctx)
    if (c, d) == (0, 1):
        return _g2_series(tau, ctx)
    star = (_g2_series(reduced, ctx) + 1 / (8 * ctx.pi * ctx.im(reduced))) / (c * tau + d) ** 2
    return star - 1 / (8 * ctx.pi * ctx.im(tau))


def g2_star(tau, ctx: Optional[mpmath.MPContext] = None):
    """𝔾₂*(τ) = 𝔾₂(τ) + 1/(8π Im τ)"""
    ctx = ctx or mpmath.mp
    tau = ctx.mpc(tau)
    return g2(tau, ctx) + 1 / (8 * ctx.pi * ctx.im(tau))


def reduce_to_fundamental_domain(tau, ctx: Optional[mpmath.MPContext] = None, max_steps: int = 1000):
    """返回 (τ', (a, b, c, d))，τ' = (aτ+b)/(cτ+d) 位于标准基本域"""
    ctx = ctx or mpmath.mp
    tau = ctx.mpc(tau)
    _require_upper(tau, ctx)
    a, b, c, d = 1, 0, 0, 1
    for _ in range(max_steps):
        shift = int(ctx.nint(ctx.re(tau)))
        if shift:
            tau -= shift
            a, b = a - shift * c, b - shift * d
        if abs(tau) < 1 - ctx.eps * 16:
            tau = -1 / tau
            a, b, c, d = -c, -d, a, b
            continue
        return tau, (a, b, c, d)
    raise ConvergenceError(f"基本域约化未终止: τ = {tau}")


def mobius(gamma, tau, ctx: Optional[mpmath.MPContext] = None):
    ctx = ctx or mpmath.mp
    a, b, c, d = gamma
    return (a * ctx.mpc(tau) + b) / (c * ctx.mpc(tau) + d)


def random_sl2z(rng, bound: int = 20) -> Tuple[int, int, int, int]:
    """|c|, |d| ≤ bound 的随机 SL₂(ℤ) 元素，c ≠ 0"""
    while True:
        c = int(rng.integers(1, bound + 1)) * (1 if rng.random() < 0.5 else -1)
        d = int(rng.integers(-bound, bound + 1))
        if sp.igcd(c, d) != 1:
            continue
        # a·d − b·c = 1
        x, y, _ = sp.gcdex(d, -c)
        a, b = int(x), int(y)
        if a * d - b * c == 1:
            return a, b, c, d
