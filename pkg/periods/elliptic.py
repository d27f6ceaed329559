"""
平面三次曲线的Weierstrass化与椭圆周期

to_weierstrass：以有理点 P 为基点，
  1. 射影变换使 P = [0:0:1]、P 处切线为 y = 0；
  2. 过 P 的直线族 y = t·x 给出四次曲线 w² = D(t) = B(t)² − 4g·t·A(t)；
  3. 四次曲线 → 长Weierstrass型（一般情形 / 三次情形 / P 为拐点）；
  4. 长型 → 短型 y² = x³ + a·x + b。
elliptic_periods：ω = dx/(2y), η = x·dx/(2y)，由 K(m)、E(m) 给出，τ = ω₂/ω₁。
"""
import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Optional, Sequence, Tuple

import mpmath
import sympy as sp

from algebra.polynomial import MPoly, alphas
from common.errors import DegenerateKinematicsError
from common.kinematics import format_rational
from config.precision import precision_config
from .eisenstein import g2, reduce_to_fundamental_domain
from .values import complex_to_dict

logger = logging.getLogger(__name__)

X, Y, Z = alphas(3)
T = sp.Symbol("t")

ProjectivePoint = Tuple[sp.Rational, sp.Rational, sp.Rational]


def j_invariant(a, b) -> sp.Rational:
    a, b = sp.Rational(a), sp.Rational(b)
    disc = 4 * a**3 + 27 * b**2
    if disc == 0:
        raise DegenerateKinematicsError("singular cubic: 4a³ + 27b² = 0")
    return 1728 * 4 * a**3 / disc


@dataclass(frozen=True)
class LongWeierstrass:
    """y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆"""

    a1: sp.Rational
    a2: sp.Rational
    a3: sp.Rational
    a4: sp.Rational
    a6: sp.Rational

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1**2 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3**2 + 4 * a6
        b8 = a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> sp.Rational:
        b2, b4, b6, b8 = self.b_invariants
        return -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6

    def short(self) -> Tuple[sp.Rational, sp.Rational]:
        b2, b4, b6, _ = self.b_invariants
        c4 = b2**2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        return -27 * c4, -54 * c6

    def to_short_point(self, x, y):
        b2 = self.b_invariants[0]
        return 36 * x + 3 * b2, 108 * (2 * y + self.a1 * x + self.a3)


@dataclass(frozen=True)
class WeierstrassModel:
    """短Weierstrass型 y² = x³ + a·x + b 以及从原三次曲线出发的有理映射"""

    a: sp.Rational
    b: sp.Rational
    route: str  # identity / generic / cubic / flex
    base_point: ProjectivePoint
    frame: Optional[sp.Matrix] = field(default=None, compare=False)
    tangent_scale: sp.Rational = sp.Integer(1)
    quartic: Tuple[sp.Rational, ...] = ()
    long_form: Optional[LongWeierstrass] = None
    quadratic: Tuple[sp.Expr, sp.Expr] = field(default=(sp.Integer(0), sp.Integer(0)), compare=False)
    tangent_root: sp.Rational = sp.Integer(0)  # q = B(0)，D(0) = q²

    @property
    def discriminant(self) -> sp.Rational:
        return 4 * self.a**3 + 27 * self.b**2

    @property
    def j(self) -> sp.Rational:
        return j_invariant(self.a, self.b)

    def contains(self, point) -> bool:
        x, y = point
        return y**2 == x**3 + self.a * x + self.b

    def push(self, point: Sequence) -> Optional[Tuple[sp.Rational, sp.Rational]]:
        """原曲线上的射影点 → 短型仿射点；基点映到无穷远（返回None）"""
        point = sp.Matrix([sp.Rational(c) for c in point])
        if self.route == "identity":
            if point[2] == 0:
                return None
            return point[0] / point[2], point[1] / point[2]

        new = self.frame.inv() * point
        if new[0] == 0 and new[1] == 0:
            return None
        if new[2] == 0 or new[0] == 0:
            raise DegenerateKinematicsError(f"chart failure: 点 {tuple(point)} 不在映射的定义域内")
        x, y = new[0] / new[2], new[1] / new[2]
        t = y / x
        A, B = (expr.xreplace({T: t}) for expr in self.quadratic)
        w = 2 * A * x + B
        X_, Y_ = self._quartic_to_long(t, w)
        return self.long_form.to_short_point(X_, Y_)

    def _quartic_to_long(self, t, w):
        e, d, c, _, _ = self.quartic
        if self.route == "generic":
            q = self.tangent_root
            if t == 0:
                raise DegenerateKinematicsError("chart failure: 切线的第三个交点")
            X_ = (2 * q * (w + q) + d * t) / t**2
            Y_ = (4 * q**2 * (w + q) + 2 * q * (d * t + c * t**2) - d**2 * t**2 / (2 * q)) / t**3
            return X_, Y_
        if self.route == "cubic":
            lead = self.quartic[3]
            return lead * t, lead * w
        # flex：u = 1/t, W = w·u²
        if t == 0:
            raise DegenerateKinematicsError("chart failure: t = 0")
        lead = self.quartic[1]
        u = 1 / t
        return lead * u, lead * w * u**2

    def to_dict(self) -> Dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "j": format_rational(self.j),
            "route": self.route,
            "base_point": [format_rational(c) for c in self.base_point],
        }


def _homogeneous_cubic(cubic: MPoly) -> sp.Poly:
    if cubic.parameters:
        raise ValueError(f"三次曲线含未特化参数: {sorted(map(str, cubic.parameters))}")
    poly = sp.Poly(cubic.expr, X, Y, Z)
    if not poly.is_homogeneous or poly.total_degree() != 3:
        raise ValueError("需要齐次三次多项式")
    return poly


def _is_short_weierstrass(poly: sp.Poly, point) -> Optional[Tuple[sp.Rational, sp.Rational]]:
    """y²z − x³ − a·xz² − b·z³，基点 [0:1:0]"""
    if tuple(point) != (0, 1, 0):
        return None
    a, b = sp.symbols("_a _b")
    target = sp.Poly(Y**2 * Z - X**3 - a * X * Z**2 - b * Z**3, X, Y, Z)
    mine = dict(poly.terms())
    theirs = dict(target.terms())
    if set(mine) - set(theirs):
        return None
    if mine.get((0, 2, 1)) != 1 or mine.get((3, 0, 0)) != -1:
        return None
    return -mine.get((1, 0, 2), sp.Integer(0)), -mine.get((0, 0, 3), sp.Integer(0))


def _frame(gradient: sp.Matrix, point: sp.Matrix) -> sp.Matrix:
    """列为 (v₁, v₂, P)：v₁ 在切线上且与 P 无关，g·v₂ ≠ 0"""
    basis = [sp.Matrix([1, 0, 0]), sp.Matrix([0, 1, 0]), sp.Matrix([0, 0, 1])]
    v1 = next(
        c for c in (gradient.cross(e) for e in basis) if c.norm() != 0 and c.cross(point).norm() != 0
    )
    v2 = next(e for e in basis if gradient.dot(e) != 0)
    return sp.Matrix.hstack(v1, v2, point)


def to_weierstrass(cubic: MPoly, base_point: Sequence) -> WeierstrassModel:
    poly = _homogeneous_cubic(cubic)
    point = sp.Matrix([sp.Rational(c) for c in base_point])
    if cubic.expr.xreplace({X: point[0], Y: point[1], Z: point[2]}) != 0:
        raise ValueError(f"基点不在曲线上: {tuple(point)}")

    identity = _is_short_weierstrass(poly, tuple(point))
    if identity is not None:
        a, b = identity
        if 4 * a**3 + 27 * b**2 == 0:
            raise DegenerateKinematicsError("singular cubic: 4a³ + 27b² = 0")
        return WeierstrassModel(a=a, b=b, route="identity", base_point=tuple(point))

    expr = poly.as_expr()
    gradient = sp.Matrix([sp.diff(expr, v) for v in (X, Y, Z)]).xreplace(
        {X: point[0], Y: point[1], Z: point[2]}
    )
    if gradient.norm() == 0:
        raise DegenerateKinematicsError(f"singular cubic: 基点 {tuple(point)} 是奇点")

    M = _frame(gradient, point)
    u, v, w = sp.symbols("_u _v _w")
    moved = sp.expand(expr.xreplace(dict(zip((X, Y, Z), M * sp.Matrix([u, v, w])))))
    g = sp.Poly(moved, u, v, w).coeff_monomial(v * w**2)

    # y = t·x, z = 1 后除以 x：g·t + B(t)·x + A(t)·x² = 0
    restricted = sp.expand(moved.xreplace({v: T * u, w: 1}))
    by_x = sp.Poly(restricted, u)
    A = sp.expand(by_x.coeff_monomial(u**3))
    B = sp.expand(by_x.coeff_monomial(u**2))
    D = sp.Poly(sp.expand(B**2 - 4 * g * T * A), T)
    quartic = tuple(D.coeff_monomial(T**k) for k in range(5))  # 常数项在前
    e, d, c, b3, a4 = quartic
    q = B.xreplace({T: 0})

    if e != 0 and a4 != 0:
        route = "generic"
        long_form = LongWeierstrass(
            a1=d / q,
            a2=c - d**2 / (4 * q**2),
            a3=2 * q * b3,
            a4=-4 * q**2 * a4,
            a6=(c - d**2 / (4 * q**2)) * (-4 * q**2 * a4),
        )
    elif e != 0:
        # D 为三次：(b₃w)² = (b₃t)³ + c(b₃t)² + d·b₃(b₃t) + e·b₃²
        if b3 == 0:
            raise DegenerateKinematicsError("singular cubic: 四次式退化")
        route = "cubic"
        long_form = LongWeierstrass(0, c, 0, d * b3, e * b3**2)
    else:
        # P 为拐点：t = 1/u 后 (w·u²)² = d·u³ + c·u² + b₃·u + a₄
        if d == 0:
            raise DegenerateKinematicsError("singular cubic: 拐点处四次式退化")
        route = "flex"
        long_form = LongWeierstrass(0, c, 0, b3 * d, a4 * d**2)

    if long_form.discriminant == 0:
        raise DegenerateKinematicsError(f"singular cubic: 判别式为0 (base {tuple(point)})")
    a, b = long_form.short()
    logger.debug(f"Weierstrass化 ({route}): a = {a}, b = {b}")
    return WeierstrassModel(
        a=a,
        b=b,
        route=route,
        base_point=tuple(point),
        frame=M,
        tangent_scale=g,
        quartic=quartic,
        long_form=long_form,
        quadratic=(A, B),
        tangent_root=q,
    )


@dataclass(frozen=True)
class EllipticData:
    a: sp.Rational
    b: sp.Rational
    omega1: mpmath.mpc
    omega2: mpmath.mpc
    eta1: mpmath.mpc
    eta2: mpmath.mpc
    ctx: mpmath.MPContext = field(compare=False, repr=False)

    @property
    def tau(self):
        return self.omega2 / self.omega1

    @property
    def lam(self):
        """λ = ω₁/(2πi)"""
        return self.omega1 / (2j * self.ctx.pi)

    def period_matrix(self) -> mpmath.matrix:
        return self.ctx.matrix([[self.omega1, self.eta1], [self.omega2, self.eta2]])

    def legendre_residual(self):
        ctx = self.ctx
        return abs(self.omega1 * self.eta2 - self.eta1 * self.omega2 - 2j * ctx.pi)

    def fricke_residual(self):
        ctx = self.ctx
        return abs(g2(self.tau, ctx) + self.omega1 * self.eta1 / 2 / (2j * ctx.pi) ** 2)

    def to_dict(self, digits: int = 30) -> Dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "omega1": complex_to_dict(self.omega1, digits),
            "omega2": complex_to_dict(self.omega2, digits),
            "eta1": complex_to_dict(self.eta1, digits),
            "eta2": complex_to_dict(self.eta2, digits),
            "tau": complex_to_dict(self.tau, digits),
            "lambda": complex_to_dict(self.lam, digits),
            "legendre_residual": self.ctx.nstr(self.legendre_residual(), 5),
        }


def _ordered_roots(roots, ctx):
    """选取 m = (e₂−e₃)/(e₁−e₃) 离 0 与 1 都最远的排列"""
    best = None
    for e1, e2, e3 in permutations(roots):
        m = (e2 - e3) / (e1 - e3)
        score = max(abs(m), abs(1 - m))
        if best is None or score < best[0]:
            best = (score, (e1, e2, e3))
    return best[1]


def elliptic_periods(a, b, prec: Optional[int] = None) -> EllipticData:
    """
    y² = x³ + ax + b 的周期与准周期
    ω_i = ∮_{γ_i} dx/(2y)，η_i = ∮_{γ_i} x·dx/(2y)，由完全椭圆积分 K、E 给出
    τ = ω₂/ω₁ 且 Im τ > 0（否则 ω₂、η₂ 同时变号），再约化到 SL₂(ℤ) 基本域
    Legendre 关系 ω₁η₂ − η₁ω₂ = 2πi；Eichler 积分的常数项 (−τ)^{j+1}/(j+1) 依赖这一约定
    """
    ctx = precision_config.make_context(prec)
    a, b = sp.Rational(a), sp.Rational(b)
    if 4 * a**3 + 27 * b**2 == 0:
        raise DegenerateKinematicsError("singular cubic: 4a³ + 27b² = 0")
    roots = ctx.polyroots(
        [1, 0, _mp(ctx, a), _mp(ctx, b)], maxsteps=200, extraprec=2 * ctx.prec
    )
    e1, e2, e3 = _ordered_roots([ctx.mpc(r) for r in roots], ctx)

    m = (e2 - e3) / (e1 - e3)
    s = ctx.sqrt(e1 - e3)
    s_prime = ctx.sqrt(e3 - e1)
    K, E = ctx.ellipk(m), ctx.ellipe(m)
    K1, E1 = ctx.ellipk(1 - m), ctx.ellipe(1 - m)

    omega1 = 2 * K / s
    eta1 = 2 * (e1 * K - s**2 * E) / s
    omega2 = 2 * K1 / s_prime
    eta2 = 2 * (e3 * K1 - s_prime**2 * E1) / s_prime
    if ctx.im(omega2 / omega1) < 0:
        omega2, eta2 = -omega2, -eta2

    # 约化到基本域：(ω₂, ω₁) ↦ (aω₂ + bω₁, cω₂ + dω₁)
    _, (ga, gb, gc, gd) = reduce_to_fundamental_domain(omega2 / omega1, ctx)
    omega2, omega1 = ga * omega2 + gb * omega1, gc * omega2 + gd * omega1
    eta2, eta1 = ga * eta2 + gb * eta1, gc * eta2 + gd * eta1

    data = EllipticData(a=a, b=b, omega1=omega1, omega2=omega2, eta1=eta1, eta2=eta2, ctx=ctx)
    logger.debug(f"周期: ω₁={ctx.nstr(omega1, 12)}, τ={ctx.nstr(data.tau, 12)}")
    return data


def _mp(ctx: mpmath.MPContext, value):
    value = sp.Rational(value)
    return ctx.mpf(value.p) / value.q


def period_oracle(a, b, prec: Optional[int] = None):
    """实根情形：∫_{e_max}^∞ dx/√(x³+ax+b)（= 实周期 2∫dx/(2y)）"""
    ctx = precision_config.make_context(prec)
    a, b = _mp(ctx, a), _mp(ctx, b)
    tiny = ctx.mpf(10) ** (-(ctx.dps // 2))
    roots = [ctx.re(r) for r in ctx.polyroots([1, 0, a, b], extraprec=ctx.prec) if abs(ctx.im(r)) < tiny]
    start = max(roots)
    return ctx.quad(lambda x: 1 / ctx.sqrt(x**3 + a * x + b), [start, start + 1, ctx.inf])
