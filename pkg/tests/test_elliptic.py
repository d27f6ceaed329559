"""
Weierstrass化、椭圆周期、q展开与基本域约化
"""
import numpy as np
import pytest
import sympy as sp

from algebra.polynomial import MPoly, alphas
from common.errors import DegenerateKinematicsError, InputError
from periods import (
    delta_expansion,
    e4_expansion,
    e6_expansion,
    elliptic_period_matrix,
    elliptic_periods,
    g2,
    g2_expansion,
    g2_star,
    j_invariant,
    mobius,
    parse_complex,
    period_oracle,
    reduce_to_fundamental_domain,
    to_weierstrass,
)
from periods.eisenstein import random_sl2z
from sunrise import boundary_points, specialized_xi

X, Y, Z = alphas(3)


def _random_curve_with_point(rng):
    """y² = x³ + ax + b 与其上的有理点 (x₀, y₀)，y₀ ≠ 0"""
    while True:
        a = sp.Rational(int(rng.integers(-9, 10)), int(rng.integers(1, 4)))
        x0 = sp.Rational(int(rng.integers(-5, 6)), int(rng.integers(1, 3)))
        y0 = sp.Rational(int(rng.integers(1, 6)), int(rng.integers(1, 3)))
        b = y0**2 - x0**3 - a * x0
        if 4 * a**3 + 27 * b**2 != 0:
            return a, b, (x0, y0)


def _is_flex(a, b, x):
    # 3-挠点的 x 坐标
    return 3 * x**4 + 6 * a * x**2 + 12 * b * x - a**2 == 0


def _random_matrix(rng):
    while True:
        N = sp.Matrix(3, 3, [int(v) for v in rng.integers(-3, 4, size=9)])
        if N.det() != 0:
            return N


def _transformed(a, b, N):
    """C'(p) = C(N·p)，C 为短 Weierstrass 三次式"""
    short = Y**2 * Z - X**3 - a * X * Z**2 - b * Z**3
    image = N * sp.Matrix([X, Y, Z])
    return MPoly(sp.expand(short.xreplace({X: image[0], Y: image[1], Z: image[2]})))


def random_cubic(route, seed):
    """射影变换后的随机三次曲线与基点，基点的位置决定 to_weierstrass 走哪条路线"""
    rng = np.random.default_rng(seed)
    while True:
        a, b, (x0, y0) = _random_curve_with_point(rng)
        if route == "flex":
            N = _random_matrix(rng)
            base = N.inv() * sp.Matrix([0, 1, 0])
        elif route == "generic":
            if _is_flex(a, b, x0):
                continue
            N = _random_matrix(rng)
            base = N.inv() * sp.Matrix([x0, y0, 1])
        else:
            # Q 处切线与曲线的第三个交点 P；P、Q 送到 e₃、e₁ 后沿 e₁ 的直线切曲线于 Q
            slope = (3 * x0**2 + a) / (2 * y0)
            x1 = slope**2 - 2 * x0
            if x1 == x0 or _is_flex(a, b, x1):
                continue
            y1 = y0 + slope * (x1 - x0)
            middle = [int(v) for v in rng.integers(-3, 4, size=3)]
            N = sp.Matrix.hstack(sp.Matrix([x0, y0, 1]), sp.Matrix(middle), sp.Matrix([x1, y1, 1]))
            if N.det() == 0:
                continue
            base = sp.Matrix([0, 0, 1])
        return a, b, _transformed(a, b, N), tuple(base)


class TestJInvariant:
    def test_special_values(self):
        assert j_invariant(0, 1) == 0
        assert j_invariant(1, 0) == 1728

    def test_singular(self):
        with pytest.raises(DegenerateKinematicsError):
            j_invariant(-3, 2)


class TestWeierstrass:
    def test_identity_route(self):
        cubic = MPoly(Y**2 * Z - X**3 + X * Z**2 - Z**3)
        model = to_weierstrass(cubic, (0, 1, 0))
        assert model.route == "identity"
        assert (model.a, model.b) == (-1, 1)
        assert model.push((0, 1, 0)) is None
        assert model.push((2, 2, 2)) == (1, 1)
        assert model.contains((1, 1))
        assert model.j == sp.Rational(1728 * 4 * -1, 23)

    def test_base_point_off_curve(self):
        cubic = MPoly(Y**2 * Z - X**3 + X * Z**2)
        with pytest.raises(ValueError):
            to_weierstrass(cubic, (1, 1, 1))

    def test_unspecialized_cubic(self):
        with pytest.raises(ValueError):
            to_weierstrass(MPoly(sp.Symbol("m1sq") * X**3), (0, 1, 0))

    @pytest.mark.parametrize("seed", range(4))
    @pytest.mark.parametrize("route", ["generic", "cubic", "flex"])
    def test_random_cubic_routes(self, route, seed):
        a, b, cubic, base = random_cubic(route, seed)
        model = to_weierstrass(cubic, base)
        assert model.route == route
        assert model.j == j_invariant(a, b)
        assert model.push(base) is None

        data = elliptic_periods(model.a, model.b, prec=128)
        ctx = data.ctx
        assert data.legendre_residual() < ctx.mpf(10) ** -20
        assert data.fricke_residual() < ctx.mpf(10) ** -10

    def test_sunrise_j_is_base_independent(self, kin_1235):
        xi = specialized_xi(kin_1235)
        points = boundary_points(kin_1235, xi)
        first = to_weierstrass(xi, points["P1"].image)
        second = to_weierstrass(xi, points["P2"].image)
        assert first.j == second.j
        # 数值上 j ≈ 56645.9456
        assert abs(float(first.j) - 56645.9456) < 1e-3

    def test_sunrise_boundary_images(self, kin_1235):
        xi = specialized_xi(kin_1235)
        points = boundary_points(kin_1235, xi)
        model = to_weierstrass(xi, points["P1"].image)
        assert model.push(points["P1"].image) is None
        for point in points.values():
            try:
                image = model.push(point.image)
            except DegenerateKinematicsError:
                continue
            if image is not None:
                assert model.contains(image), point.label


class TestEllipticPeriods:
    def test_lemniscatic(self):
        data = elliptic_periods(-1, 0, prec=128)
        ctx = data.ctx
        assert abs(data.tau - 1j) < ctx.mpf(10) ** -20
        assert data.legendre_residual() < ctx.mpf(10) ** -20
        assert data.fricke_residual() < ctx.mpf(10) ** -10
        assert abs(abs(data.omega1) - period_oracle(-1, 0, prec=128)) < ctx.mpf(10) ** -15

    @pytest.mark.parametrize("a, b", [(1, 1), (-7, 6), (sp.Rational(-2, 3), sp.Rational(5, 7))])
    def test_identities(self, a, b):
        data = elliptic_periods(a, b, prec=128)
        ctx = data.ctx
        assert ctx.im(data.tau) > 0
        assert abs(ctx.re(data.tau)) <= 0.5 + 1e-20
        assert abs(data.tau) >= 1 - 1e-20
        assert data.legendre_residual() < ctx.mpf(10) ** -20
        assert data.fricke_residual() < ctx.mpf(10) ** -10

    @pytest.mark.parametrize("seed", range(10))
    def test_random_curves(self, seed):
        rng = np.random.default_rng(1000 + seed)
        while True:
            a = sp.Rational(int(rng.integers(-50, 51)), int(rng.integers(1, 10)))
            b = sp.Rational(int(rng.integers(-50, 51)), int(rng.integers(1, 10)))
            if 4 * a**3 + 27 * b**2 != 0:
                break
        data = elliptic_periods(a, b, prec=128)
        ctx = data.ctx
        assert ctx.im(data.tau) > 0
        assert data.legendre_residual() < ctx.mpf(10) ** -20
        assert data.fricke_residual() < ctx.mpf(10) ** -10

    @pytest.mark.parametrize("a, b", [(-1, 0), (1, 1)])
    def test_tau_is_period_ratio(self, a, b):
        """τ = ω₂/ω₁，ω₁ 为 ∮dx/(2y)，实根时其模等于 ∫_{e₁}^∞ dx/y"""
        data = elliptic_periods(a, b, prec=128)
        ctx = data.ctx
        assert data.tau == data.omega2 / data.omega1
        assert ctx.im(data.omega2 / data.omega1) > 0
        if a == -1:
            assert abs(abs(data.omega1) - period_oracle(a, b, prec=128)) < ctx.mpf(10) ** -15

    def test_reconstruct_from_tau_lambda(self):
        data = elliptic_periods(-7, 6, prec=128)
        ctx = data.ctx
        rebuilt = elliptic_period_matrix(data.tau, data.lam, ctx)
        original = data.period_matrix()
        for i in range(2):
            for j in range(2):
                assert abs(rebuilt[i, j] - original[i, j]) < ctx.mpf(10) ** -10

    def test_singular(self):
        with pytest.raises(DegenerateKinematicsError):
            elliptic_periods(-3, 2)

    def test_document(self):
        document = elliptic_periods(-1, 0, prec=64).to_dict(digits=10)
        assert set(document["tau"]) == {"re", "im"}
        assert document["a"] == "-1"


class TestQExpansions:
    def test_coefficients(self):
        assert list(delta_expansion(5).coefficients) == [0, 1, -24, 252, -1472, 4830]
        assert list(e4_expansion(2).coefficients) == [1, 240, 2160]
        assert list(e6_expansion(2).coefficients) == [1, -504, -16632]
        assert list(g2_expansion(4).coefficients) == [sp.Rational(-1, 24), 1, 3, 4, 7]

    def test_addition_truncates(self):
        total = delta_expansion(10) + e4_expansion(5).scale(2)
        assert total.order == 5
        assert total.coefficients[1] == 1 + 480

    def test_g2_matches_expansion(self, ctx):
        tau = ctx.mpc(0.1, 1.3)
        series = g2_expansion(60).evaluate(tau, ctx)
        assert abs(g2(tau, ctx) - series) < ctx.mpf(10) ** -25

    def test_g2_tiny_q(self, ctx):
        tau = ctx.mpc(0, 10)
        q = ctx.exp(2j * ctx.pi * tau)
        assert abs(g2(tau, ctx) - (ctx.mpf(-1) / 24 + q)) < ctx.mpf(10) ** -25
        assert g2_expansion(6).coefficients[6] == 12

    def test_g2_star_weight_two(self, ctx):
        """𝔾₂* 在 SL₂(ℤ) 下为权2"""
        tau = ctx.mpc(0.1, 1.2)
        gamma = (2, 1, 1, 1)
        lhs = g2_star(mobius(gamma, tau, ctx), ctx)
        rhs = (tau + 1) ** 2 * g2_star(tau, ctx)
        assert abs(lhs - rhs) < ctx.mpf(10) ** -25

    def test_g2_star_near_real_axis(self, ctx):
        """Im τ 很小时级数无法直接求和，靠基本域约化"""
        tau = ctx.mpc(0.3, 0.02)
        lhs = g2_star(-1 / tau, ctx)
        rhs = tau**2 * g2_star(tau, ctx)
        assert abs(lhs - rhs) < ctx.mpf(10) ** -15 * abs(rhs)

    def test_lower_half_plane(self, ctx):
        with pytest.raises(ValueError):
            g2(ctx.mpc(0, -1), ctx)


class TestModularGroup:
    def test_reduction(self, ctx):
        tau = ctx.mpc(0.3, 0.05)
        reduced, gamma = reduce_to_fundamental_domain(tau, ctx)
        a, b, c, d = gamma
        assert a * d - b * c == 1
        assert abs(ctx.re(reduced)) <= 0.5 + 1e-30
        assert abs(reduced) >= 1 - 1e-30
        assert abs(mobius(gamma, tau, ctx) - reduced) < ctx.mpf(10) ** -25

    def test_random_elements(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            a, b, c, d = random_sl2z(rng, 20)
            assert a * d - b * c == 1
            assert c != 0


class TestParseComplex:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("0.1+1.1i", complex(0.1, 1.1)),
            ("2i", 2j),
            ("-i", -1j),
            ("3", 3),
            ("-0.5-2j", complex(-0.5, -2)),
        ],
    )
    def test_forms(self, text, expected):
        assert abs(parse_complex(text) - expected) < 1e-12

    @pytest.mark.parametrize("text", ["", "abc", "1+"])
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_complex(text)
