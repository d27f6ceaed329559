"""
矩阵树定理：Ψ_G 的独立求值与生成树计数
删去一个顶点对应的行列后求约化Laplacian行列式（精确有理数）
"""
import logging
from typing import Mapping

import sympy as sp

from common.kinematics import parse_rational
from .feynman_graph import FeynmanGraph
from .symanzik import symanzik_first

logger = logging.getLogger(__name__)


def _reduced_laplacian(graph: FeynmanGraph, weights: Mapping[str, sp.Rational]) -> sp.Matrix:
    index = {v: i for i, v in enumerate(graph.vertices)}
    n = len(graph.vertices)
    laplacian = sp.zeros(n, n)
    for edge in graph.edges:
        if edge.is_self_loop:
            continue
        i, j = index[edge.source], index[edge.target]
        w = weights[edge.id]
        laplacian[i, i] += w
        laplacian[j, j] += w
        laplacian[i, j] -= w
        laplacian[j, i] -= w
    return laplacian[1:, 1:]


def kirchhoff_tree_count(graph: FeynmanGraph) -> int:
    """无权约化Laplacian行列式 = 生成树个数"""
    graph.require_connected()
    if len(graph.vertices) == 1:
        return 1
    minor = _reduced_laplacian(graph, {e.id: sp.Integer(1) for e in graph.edges})
    return int(minor.det(method="bareiss"))


def kirchhoff_oracle_eval(graph: FeynmanGraph, assignment: Mapping) -> sp.Rational:
    """
    Ψ_G(α) = (Π α_e)·det(权重为1/α_e的约化Laplacian)
    assignment 的键可以是边id、1起始编号或 a{i} 符号
    """
    graph.require_connected()
    values = {}
    for edge in graph.edges:
        symbol = graph.alpha(edge.id)
        for key in (edge.id, graph.edge_index(edge.id), symbol, str(symbol)):
            if key in assignment:
                values[edge.id] = parse_rational(assignment[key])
                break
        else:
            raise ValueError(f"缺少 {symbol} 的取值")

    if any(v == 0 for v in values.values()):
        # 有零参数时退回直接枚举求值
        logger.debug("存在 α_e = 0，改用生成树枚举求值")
        psi = symanzik_first(graph)
        return psi.evaluate({graph.alpha(eid): v for eid, v in values.items()})

    product = sp.Mul(*values.values())
    if len(graph.vertices) == 1:
        return sp.Rational(product)
    minor = _reduced_laplacian(graph, {eid: 1 / v for eid, v in values.items()})
    return sp.Rational(product * minor.det(method="bareiss"))
