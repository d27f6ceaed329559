"""
正则化 Eichler 积分
"""
import pytest

from periods import (
    QExpansion,
    delta_expansion,
    e4_expansion,
    eichler_integral,
    unipotent_period,
)


@pytest.fixture
def tau(ctx):
    return ctx.mpc(0.1, 1.5)


def test_power_range(ctx, tau):
    for j in (-1, 11):
        with pytest.raises(ValueError):
            eichler_integral(delta_expansion(10), tau, j, ctx=ctx)


def test_lower_half_plane(ctx):
    with pytest.raises(ValueError):
        eichler_integral(e4_expansion(10), ctx.mpc(0.1, -1), 0, ctx=ctx)


@pytest.mark.parametrize("j", [0, 3, 10])
def test_cusp_form_against_quadrature(ctx, tau, j):
    """尖形式没有常数项，∫_τ^{i∞} 直接沿竖直线收敛"""
    delta = delta_expansion(30)
    ray = lambda t: delta.evaluate(tau + 1j * t, ctx) * (1j * t) ** j * 1j
    reference = ctx.quad(ray, [0, 1, ctx.inf])
    value = eichler_integral(delta, tau, j, ctx=ctx)
    assert abs(value - reference) < ctx.mpf(10) ** -15 * (1 + abs(reference))


def test_linearity(ctx, tau):
    delta, e4 = delta_expansion(30), e4_expansion(30)
    combined = delta + e4.scale(3)
    difference = (
        eichler_integral(combined, tau, 2, weight=12, ctx=ctx)
        - eichler_integral(delta, tau, 2, ctx=ctx)
        - 3 * eichler_integral(e4, tau, 2, weight=12, ctx=ctx)
    )
    assert abs(difference) < ctx.mpf(10) ** -25


def test_derivative_law(ctx, tau):
    """d/dτ ∫_τ^{i∞} f(z)(z − τ)dz = −∫_τ^{i∞} f(z)dz，常数项的正则化同样满足"""
    e4 = e4_expansion(30)
    step = ctx.mpc(0, 1) * ctx.mpf(10) ** -10
    derivative = (
        eichler_integral(e4, tau + step, 1, ctx=ctx) - eichler_integral(e4, tau - step, 1, ctx=ctx)
    ) / (2 * step)
    reference = -eichler_integral(e4, tau, 0, ctx=ctx)
    assert abs(derivative - reference) < ctx.mpf(10) ** -12 * abs(reference)


def test_constant_term_regularization(ctx, tau):
    constant = QExpansion.from_list([1], weight=4)
    assert abs(eichler_integral(constant, tau, 1, ctx=ctx) - tau**2 / 2) < ctx.mpf(10) ** -30


def test_truncation(ctx, tau):
    short, long = delta_expansion(30), delta_expansion(60)
    difference = eichler_integral(short, tau, 5, ctx=ctx) - eichler_integral(long, tau, 5, ctx=ctx)
    assert abs(difference) < ctx.mpf(10) ** -10
    assert short.truncation_bound(tau, ctx) > long.truncation_bound(tau, ctx)


def test_unipotent_period(ctx, tau):
    e4 = e4_expansion(20)
    expected = (2j * ctx.pi) ** 2 * eichler_integral(e4, tau, 1, ctx=ctx)
    assert abs(unipotent_period(e4, tau, ctx) - expected) < ctx.mpf(10) ** -30
