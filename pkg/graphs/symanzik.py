"""
生成树/生成2-森林枚举与Symanzik多项式
直接子集枚举（≤16条边足够），Kirchhoff行列式作为独立校验
"""
import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import sympy as sp
from networkx.utils import UnionFind

from algebra.polynomial import MPoly
from common.errors import GraphError
from .feynman_graph import FeynmanGraph, MandelstamDictionary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoForest:
    edges: FrozenSet[str]
    components: Tuple[FrozenSet[str], FrozenSet[str]]


def _components(graph: FeynmanGraph, edge_ids) -> Optional[List[FrozenSet[str]]]:
    """若边集无圈则返回连通分支，否则None"""
    forest = UnionFind(graph.vertices)
    for edge_id in edge_ids:
        edge = graph.edge(edge_id)
        if forest[edge.source] == forest[edge.target]:
            return None
        forest.union(edge.source, edge.target)
    return [frozenset(group) for group in forest.to_sets()]


def _check_size(graph: FeynmanGraph):
    if graph.n_edges > 16:
        logger.warning(f"⚠️ 边数 {graph.n_edges} 较大，子集枚举可能很慢")


def spanning_trees(graph: FeynmanGraph) -> List[FrozenSet[str]]:
    """全部生成树（内边id集合）"""
    graph.require_connected()
    _check_size(graph)
    size = len(graph.vertices) - 1
    ids = [e.id for e in graph.edges]
    trees = []
    for subset in itertools.combinations(ids, size):
        parts = _components(graph, subset)
        if parts is not None and len(parts) == 1:
            trees.append(frozenset(subset))
    return trees


def spanning_two_forests(graph: FeynmanGraph) -> List[TwoForest]:
    """全部生成2-森林及其顶点二分"""
    graph.require_connected()
    _check_size(graph)
    size = len(graph.vertices) - 2
    if size < 0:
        return []
    ids = [e.id for e in graph.edges]
    forests = []
    for subset in itertools.combinations(ids, size):
        parts = _components(graph, subset)
        if parts is not None and len(parts) == 2:
            first, second = sorted(parts, key=lambda s: sorted(s))
            forests.append(TwoForest(edges=frozenset(subset), components=(first, second)))
    return forests


def _complement_monomial(graph: FeynmanGraph, kept: FrozenSet[str]) -> sp.Expr:
    return sp.Mul(*(graph.alpha(e.id) for e in graph.edges if e.id not in kept))


def symanzik_first(graph: FeynmanGraph) -> MPoly:
    """Ψ_G = Σ_T Π_{e∉T} α_e"""
    return MPoly(sp.Add(*(_complement_monomial(graph, tree) for tree in spanning_trees(graph))))


def symanzik_second(
    graph: FeynmanGraph, mandelstam: Optional[MandelstamDictionary] = None
) -> MPoly:
    """Ξ_G = Σ_{2-森林} (q^{T₁})² Π_{e∉F} α_e + (Σ m_e² α_e)·Ψ_G"""
    mandelstam = mandelstam if mandelstam is not None else graph.mandelstam
    labels = graph.momentum_labels
    momentum_part = []
    for forest in spanning_two_forests(graph):
        side = graph.legs_at(forest.components[0])
        # 某一侧没有外腿时贡献为0
        if not side or side == labels:
            continue
        symbol = mandelstam.lookup(side)
        if symbol is None:
            raise GraphError(
                f"缺少Mandelstam条目: {sorted(side)} | {sorted(labels - side)}"
            )
        momentum_part.append(symbol * _complement_monomial(graph, forest.edges))

    mass_part = sp.Add(
        *(e.mass_symbol * graph.alpha(e.id) for e in graph.edges if e.mass)
    )
    psi = symanzik_first(graph)
    return MPoly(sp.Add(*momentum_part)) + psi * mass_part
