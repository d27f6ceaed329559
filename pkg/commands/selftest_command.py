"""
验收自检命令
逐项运行验收检查，每项返回 (是否通过, 细节)，任何一项失败退出码为1
"""
import math
import time
from collections import OrderedDict
from typing import Any, Callable, Dict, Tuple

import mpmath
import numpy as np
import sympy as sp

from algebra.polynomial import MPoly, alpha
from common.kinematics import KinematicPoint
from config.precision import precision_config
from config.settings import COMPUTE_CONFIG
from graphs.standard import random_graph, sunrise
from graphs.subdivision import SubdivisionSpec, subdivide, subdivision_substitution
from graphs.symanzik import symanzik_first, symanzik_second
from integrands.catalog import sunrise_catalog
from integrands.projform import verify_pullback_identity
from periods.eichler import eichler_integral
from periods.eisenstein import delta_expansion, e4_expansion, random_sl2z
from periods.elliptic import elliptic_periods
from periods.quadrature import simplex_quadrature
from periods.single_valued import (
    bloch_wigner,
    elliptic_period_matrix,
    log_period_matrix,
    sv_dilog_corner,
    sv_elliptic_matrix,
    sv_from_period_matrix,
    sv_incomplete_pair,
    transform_arguments,
)
from sunrise.appendix import sweep_summary, verify_appendix
from sunrise.weight0 import weight0_check
from . import BaseCommand, CommandRequest
from .quadrature_command import build_form

CheckResult = Tuple[bool, Dict[str, Any]]

PSI_SUNRISE = "a1*a2 + a1*a3 + a2*a3"


def check_symanzik(request: CommandRequest) -> CheckResult:
    graph = sunrise()
    psi, xi = symanzik_first(graph), symanzik_second(graph)
    a1, a2, a3 = (alpha(i) for i in (1, 2, 3))
    m1, m2, m3, q = sp.symbols("m1sq m2sq m3sq q1sq")
    expected = MPoly(q * a1 * a2 * a3 + (m1 * a1 + m2 * a2 + m3 * a3) * psi.expr)
    return psi.to_string() == PSI_SUNRISE and xi == expected, {"psi": psi.to_string()}


def check_appendix(request: CommandRequest) -> CheckResult:
    samples = request.samples or COMPUTE_CONFIG["default_samples"]
    seed = COMPUTE_CONFIG["default_seed"] if request.seed is None else request.seed
    summary = sweep_summary(verify_appendix(samples=samples, seed=seed))
    ok = summary["match"] and summary["rank_ok"] and summary["closure_ok"]
    request.options["_appendix_summary"] = summary
    return ok, summary


def check_b_prime(request: CommandRequest) -> CheckResult:
    summary = request.options.get("_appendix_summary")
    if summary is None:
        summary = sweep_summary(verify_appendix(samples=10, seed=request.seed or 0))
    return summary["b_prime_ok"], {"b_prime_ok": summary["b_prime_ok"]}


def check_subdivision(request: CommandRequest) -> CheckResult:
    rng = np.random.default_rng(request.seed or 0)
    failures = 0
    for _ in range(10):
        n_vertices = int(rng.integers(2, 5))
        n_edges = int(rng.integers(max(n_vertices - 1, 2), 5))
        graph = random_graph(rng, n_vertices, n_edges)
        counts = [int(k) for k in rng.integers(0, 2, size=graph.n_edges)]
        spec = SubdivisionSpec.for_graph(graph, counts)
        sub = subdivide(graph, spec)
        mapping = subdivision_substitution(graph, spec)
        if symanzik_first(graph).substitute(mapping) != symanzik_first(sub):
            failures += 1
        elif symanzik_second(graph).substitute(mapping) != symanzik_second(sub):
            failures += 1

    forms = sunrise_catalog(choice="nu")
    eta = forms["eta"]
    eta_ok = eta.xi_exp == 2 and eta.folded_numerator() == MPoly(-alpha(1)) * eta.psi
    identity_ok = verify_pullback_identity(sunrise(), 4, 2)
    ok = failures == 0 and eta_ok and identity_ok
    return ok, {"substitution_failures": failures, "eta_ok": eta_ok, "identity_ok": identity_ok}


def check_motivic_logs(request: CommandRequest) -> CheckResult:
    details = {}
    ok = True
    for kin, expected in (
        (KinematicPoint.sunrise(1, 2, 3, 5), (-math.log(3 / 2), -math.log(1 / 3), -math.log(2))),
        (KinematicPoint.sunrise(1, 1, 1, 1), (0.0, 0.0, 0.0)),
    ):
        for name, target in zip(("mu1", "mu2", "mu3"), expected):
            result = simplex_quadrature(build_form(name), kin, 1e-7)
            deviation = abs(result.value - target)
            ok = ok and deviation < 1e-6
            details[f"{name}@{','.join(kin.to_dict().values())}"] = repr(deviation)
    return ok, details


def check_period_shadow(request: CommandRequest) -> CheckResult:
    details = {}
    ok = True
    for kin in (KinematicPoint.sunrise(1, 2, 3, 5), KinematicPoint.sunrise(2, 3, 5, 7)):
        own = simplex_quadrature(build_form("gs_e1"), kin, 1e-6)
        eta = simplex_quadrature(build_form("eta"), kin, 1e-6)
        # 纤维积分带一个负号：∫ω_{G_s(e1)} = −∫η_G
        deviation = abs(own.value + eta.value)
        ok = ok and deviation < 1e-5
        details[",".join(kin.to_dict().values())] = repr(deviation)
    return ok, details


def _random_curve(rng) -> Tuple[sp.Rational, sp.Rational]:
    while True:
        a = sp.Rational(int(rng.integers(-50, 51)), int(rng.integers(1, 10)))
        b = sp.Rational(int(rng.integers(-50, 51)), int(rng.integers(1, 10)))
        if 4 * a**3 + 27 * b**2 != 0:
            return a, b


def check_elliptic(request: CommandRequest) -> CheckResult:
    rng = np.random.default_rng(request.seed or 0)
    worst = {"legendre": 0.0, "fricke": 0.0, "sv": 0.0}
    for _ in range(10):
        data = elliptic_periods(*_random_curve(rng), prec=128)
        ctx = data.ctx
        f = sv_elliptic_matrix(data.tau, data.lam, ctx)
        direct = sv_from_period_matrix(data.period_matrix(), ctx)
        sv_residual = max(abs(f[i, j] - direct[i, j]) for i in range(2) for j in range(2))
        worst["legendre"] = max(worst["legendre"], float(data.legendre_residual()))
        worst["fricke"] = max(worst["fricke"], float(data.fricke_residual()))
        worst["sv"] = max(worst["sv"], float(sv_residual))
    ok = worst["legendre"] < 1e-20 and worst["fricke"] < 1e-10 and worst["sv"] < 1e-10
    return ok, {k: repr(v) for k, v in worst.items()}


def check_modular(request: CommandRequest) -> CheckResult:
    rng = np.random.default_rng(request.seed or 0)
    ctx = precision_config.make_context()
    worst = 0.0
    for _ in range(25):
        gamma = random_sl2z(rng, 20)
        tau = ctx.mpc(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 1.6))
        lam = ctx.mpc(rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5))
        z1 = ctx.mpc(rng.uniform(0.05, 0.45), rng.uniform(0.05, 0.4))
        z2 = ctx.mpc(rng.uniform(-0.45, -0.05), rng.uniform(0.05, 0.4))
        tau2, w1, w2, lam2 = transform_arguments(gamma, tau, z1, z2, lam, ctx)
        f, g = sv_elliptic_matrix(tau, lam, ctx), sv_elliptic_matrix(tau2, lam2, ctx)
        pair, pair2 = sv_incomplete_pair(tau, z1, z2, lam, ctx), sv_incomplete_pair(tau2, w1, w2, lam2, ctx)
        errors = [abs(f[i, j] - g[i, j]) / (1 + abs(f[i, j])) for i in range(2) for j in range(2)]
        errors += [abs(x - y) / (1 + abs(x)) for x, y in zip(pair, pair2)]
        worst = max(worst, float(max(errors)))
    return worst < 1e-8, {"worst_relative_error": repr(worst)}


def check_sv_examples(request: CommandRequest) -> CheckResult:
    ctx = precision_config.make_context()
    log_entry = sv_from_period_matrix(log_period_matrix(3, ctx), ctx)[1, 0]
    log_error = abs(log_entry - 2 * ctx.log(3))
    half = ctx.mpf(1) / 2
    dilog_error = abs(sv_dilog_corner(half, ctx) - 2j * bloch_wigner(half, ctx))
    ok = log_error < 1e-10 and dilog_error < 1e-10
    return ok, {"log": ctx.nstr(log_error, 3), "dilog": ctx.nstr(dilog_error, 3)}


def check_weight0(request: CommandRequest) -> CheckResult:
    result = weight0_check()
    return result.holds, result.to_dict()


def check_eichler(request: CommandRequest) -> CheckResult:
    ctx = precision_config.make_context()
    tau = ctx.mpc(0.1, 1.5)
    delta, e4 = delta_expansion(30), e4_expansion(30)
    combined = delta + e4.scale(3)
    linear = abs(
        eichler_integral(combined, tau, 2, weight=12, ctx=ctx)
        - eichler_integral(delta, tau, 2, ctx=ctx)
        - 3 * eichler_integral(e4, tau, 2, weight=12, ctx=ctx)
    )

    # d/dτ ∫_τ^{i∞} f(z)(z−τ)dz = −∫_τ^{i∞} f(z)dz
    h = ctx.mpf(10) ** -8
    step = ctx.mpc(0, 1) * h
    derivative = (
        eichler_integral(e4, tau + step, 1, ctx=ctx) - eichler_integral(e4, tau - step, 1, ctx=ctx)
    ) / (2 * step)
    reference = -eichler_integral(e4, tau, 0, ctx=ctx)
    derivative_error = abs(derivative - reference) / abs(reference)

    truncation = abs(
        eichler_integral(delta_expansion(30), tau, 5, ctx=ctx)
        - eichler_integral(delta_expansion(60), tau, 5, ctx=ctx)
    )
    ok = linear < 1e-20 and derivative_error < 1e-6 and truncation < 1e-10
    return ok, {
        "linearity": ctx.nstr(linear, 3),
        "derivative": ctx.nstr(derivative_error, 3),
        "truncation": ctx.nstr(truncation, 3),
    }


CHECKS: "OrderedDict[str, Callable[[CommandRequest], CheckResult]]" = OrderedDict(
    [
        ("symanzik", check_symanzik),
        ("appendix", check_appendix),
        ("b_prime", check_b_prime),
        ("subdivision", check_subdivision),
        ("motivic_logs", check_motivic_logs),
        ("period_shadow", check_period_shadow),
        ("elliptic_identities", check_elliptic),
        ("modular_laws", check_modular),
        ("sv_examples", check_sv_examples),
        ("weight0", check_weight0),
        ("eichler", check_eichler),
    ]
)


class SelftestCommand(BaseCommand):
    """验收自检命令"""

    def __init__(self):
        super().__init__(
            name="selftest",
            description="运行全部验收检查；--only name1,name2 只运行指定项",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        only = request.option("only")
        if not only:
            return True
        return all(name in CHECKS for name in only.split(","))

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        only = request.option("only")
        names = only.split(",") if only else list(CHECKS)
        results = OrderedDict()
        for name in names:
            start = time.perf_counter()
            ok, details = CHECKS[name](request)
            elapsed = time.perf_counter() - start
            self.logger.info(f"{'✅' if ok else '❌'} {name} ({elapsed:.1f}s)")
            results[name] = {"passed": bool(ok), "details": details}
        request.options.pop("_appendix_summary", None)
        return {
            "checks": results,
            "all_passed": all(r["passed"] for r in results.values()),
        }

    def passed(self, document: Dict[str, Any]) -> bool:
        return document["all_passed"]


selftest_command = SelftestCommand()
