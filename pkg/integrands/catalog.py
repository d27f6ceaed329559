"""
sunrise图的形式目录：ω_G, η_G, ν₁..ν₃, ω₀, μ₁..μ₃
η 与 ν 由细分拉回构造，μ 与 ω₀ 直接写出
"""
import logging
from collections import OrderedDict
from typing import Dict, Optional

import sympy as sp

from algebra.polynomial import MPoly, alpha
from graphs.feynman_graph import FeynmanGraph, MandelstamDictionary
from graphs.standard import sunrise
from graphs.subdivision import SubdivisionSpec
from .projform import ProjForm, feynman_integrand, subdivision_pullback

logger = logging.getLogger(__name__)

# ν_i 对应的细分 I（按边 e1,e2,e3 的次数）
NU_SUBDIVISIONS = OrderedDict(
    [
        ("nu1", (1, 2, 0)),
        ("nu2", (2, 0, 1)),
        ("nu3", (0, 1, 2)),
    ]
)

CHOICES = ("all", "nu", "mu")


def _mu_numerator(xi: MPoly, i: int) -> MPoly:
    """μ_i = m_i²·α_i·(∂_{i+1}Ξ − ∂_{i+2}Ξ)，下标模3"""
    j, k = i % 3 + 1, (i + 1) % 3 + 1
    mass = sp.Symbol(f"m{i}sq")
    return mass * MPoly(alpha(i)) * (xi.partial_derivative(alpha(j)) - xi.partial_derivative(alpha(k)))


def sunrise_catalog(
    mandelstam: Optional[MandelstamDictionary] = None,
    choice: str = "all",
    graph: Optional[FeynmanGraph] = None,
) -> Dict[str, ProjForm]:
    if choice not in CHOICES:
        raise ValueError(f"不支持的目录选择: {choice}")
    graph = graph if graph is not None else sunrise()
    omega = feynman_integrand(graph, 2, mandelstam)
    xi = omega.xi

    forms: Dict[str, ProjForm] = OrderedDict()
    forms["omega"] = ProjForm(graph, MPoly(1), 0, 1, name="omega", mandelstam=mandelstam)
    eta = subdivision_pullback(graph, SubdivisionSpec((1, 0, 0)), 2, 2, mandelstam)
    forms["eta"] = ProjForm(
        graph, eta.numerator, eta.psi_exp, eta.xi_exp, eta.sign, name="eta", mandelstam=mandelstam
    )

    if choice in ("all", "nu"):
        for name, counts in NU_SUBDIVISIONS.items():
            nu = subdivision_pullback(graph, SubdivisionSpec(counts), 4, 2, mandelstam)
            forms[name] = ProjForm(
                graph, nu.numerator, nu.psi_exp, nu.xi_exp, nu.sign, name=name, mandelstam=mandelstam
            )

    if choice == "all":
        m3 = sp.Symbol("m3sq")
        forms["omega0"] = ProjForm(
            graph,
            MPoly(m3**2 * alpha(3) ** 4),
            0,
            2,
            omega_kind=("pair", 1, 2),
            name="omega0",
            mandelstam=mandelstam,
        )

    if choice in ("all", "mu"):
        for i in (1, 2, 3):
            forms[f"mu{i}"] = ProjForm(
                graph, _mu_numerator(xi, i), 0, 2, name=f"mu{i}", mandelstam=mandelstam
            )

    logger.debug(f"sunrise目录: {list(forms)}")
    return forms
