"""
单纯形数值积分：∫_σ A·Ω_G/(Ψ^a Ξ^b)

区域 σ = {α_i ≥ 0} 按最大坐标拆成 N 个扇区，扇区 j 中令 α_j = 1、其余 α_i = u_i³，
u ∈ [0,1]^{N−1} 上做张量 Gauss–Legendre；立方代换压平角点处的积分奇性。
节点数逐次加倍，相邻两次之差作为误差估计。
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
import sympy as sp

from common.errors import ConvergenceError, DegenerateKinematicsError
from common.kinematics import KinematicPoint
from config.settings import COMPUTE_CONFIG
from integrands.projform import FULL, ProjForm

logger = logging.getLogger(__name__)

CUBE_POWER = 3


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    nodes: int
    form_name: str = ""

    def to_dict(self) -> Dict:
        return {
            "form": self.form_name,
            "value": repr(float(self.value)),
            "error": repr(float(self.error)),
            "nodes": self.nodes,
        }


def _node_limit(dimension: int) -> int:
    limits = COMPUTE_CONFIG["quadrature"]
    if dimension <= 2:
        return limits["max_nodes_2d"]
    return limits["max_nodes_3d"]


def _lambdify(form: ProjForm, kin: KinematicPoint):
    variables = form.graph.alphas()
    scalar = form.scalar().xreplace(kin.symbols)
    xi = form.xi.expr.xreplace(kin.symbols)
    leftover = (scalar.free_symbols | xi.free_symbols) - set(variables)
    if leftover:
        raise ValueError(f"运动学点缺少参数: {', '.join(sorted(map(str, leftover)))}")
    return sp.lambdify(variables, scalar, "numpy"), sp.lambdify(variables, xi, "numpy")


def _sector_grid(n: int, dimension: int):
    """[0,1]^{dim} 上 u³ 代换后的坐标与权重"""
    x, w = np.polynomial.legendre.leggauss(n)
    u = (x + 1) / 2
    weights = w / 2 * CUBE_POWER * u ** (CUBE_POWER - 1)
    mesh = np.meshgrid(*([u ** CUBE_POWER] * dimension), indexing="ij")
    wmesh = np.meshgrid(*([weights] * dimension), indexing="ij")
    return [m.ravel() for m in mesh], np.prod([m.ravel() for m in wmesh], axis=0)


def _rule(integrand, xi_fn, n_edges: int, n: int) -> float:
    dimension = n_edges - 1
    coords, weights = _sector_grid(n, dimension)
    ones = np.ones_like(weights)
    total = 0.0
    for j in range(n_edges):
        args = list(coords)
        args.insert(j, ones)
        xi_values = np.broadcast_to(xi_fn(*args), weights.shape)
        if np.any(xi_values <= 0):
            raise DegenerateKinematicsError("degenerate kinematics: Ξ 在积分单纯形内部非正")
        values = np.broadcast_to(integrand(*args), weights.shape)
        total += float(np.sum(weights * values))
    return total


def simplex_quadrature(
    form: ProjForm, kin: KinematicPoint, tol: Optional[float] = None
) -> QuadratureResult:
    """返回积分值与误差估计；误差估计为最后两次加倍之差"""
    if form.omega_kind != FULL:
        raise ValueError("只能积分 Ω_G 型的顶次形式")
    tol = COMPUTE_CONFIG["default_tol"] if tol is None else float(tol)
    n_edges = form.graph.n_edges
    if n_edges < 2:
        raise ValueError("积分单纯形维数为0")
    integrand, xi_fn = _lambdify(form, kin)

    n = COMPUTE_CONFIG["quadrature"]["start_nodes"]
    limit = _node_limit(n_edges - 1)
    previous = _rule(integrand, xi_fn, n_edges, n)
    error = float("inf")
    while 2 * n <= limit:
        n *= 2
        current = _rule(integrand, xi_fn, n_edges, n)
        error = abs(current - previous)
        logger.debug(f"单纯形积分 {form.name}: n={n}, 值={current:.12g}, 差={error:.3g}")
        if error <= tol:
            return QuadratureResult(current, error, n, form.name)
        previous = current
    raise ConvergenceError(
        f"单纯形积分未达到精度 {tol:g}: {form.name}, 最后的差 {error:.3g}, n={n}"
    )
