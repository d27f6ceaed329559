"""
边细分 G_{s(I)}：第i条边换成 k_i+1 段同质量的路径，各段编号相邻
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, Mapping, Sequence, Tuple, Union

import sympy as sp

from algebra.polynomial import alpha
from common.errors import GraphError
from .feynman_graph import Edge, FeynmanGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdivisionSpec:
    """每条边的细分次数 k_i ≥ 0（按边顺序）"""

    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(k) for k in self.counts)
        if any(k < 0 for k in counts):
            raise ValueError(f"细分次数必须非负: {counts}")
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        """K = Σ k_i"""
        return sum(self.counts)

    @classmethod
    def for_graph(
        cls, graph: FeynmanGraph, counts: Union[Mapping[Union[str, int], int], Sequence[int], None] = None
    ) -> "SubdivisionSpec":
        """从 {边id或编号: k} 或完整序列构造"""
        if counts is None:
            return cls((0,) * graph.n_edges)
        if isinstance(counts, Mapping):
            full = [0] * graph.n_edges
            for key, k in counts.items():
                full[graph.edge_index(key) - 1] = int(k)
            return cls(tuple(full))
        if len(counts) != graph.n_edges:
            raise GraphError(f"细分序列长度 {len(counts)} ≠ 边数 {graph.n_edges}")
        return cls(tuple(counts))

    @classmethod
    def parse(cls, graph: FeynmanGraph, text: str) -> "SubdivisionSpec":
        """"e1:1,e2:2" 形式"""
        counts: Dict[str, int] = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, _, k = part.partition(":")
            counts[key.strip()] = int(k) if k else 1
        return cls.for_graph(graph, counts)


def subdivide(graph: FeynmanGraph, spec: SubdivisionSpec) -> FeynmanGraph:
    if len(spec.counts) != graph.n_edges:
        raise GraphError(f"细分规格长度 {len(spec.counts)} ≠ 边数 {graph.n_edges}")
    if spec.total == 0:
        return graph

    vertices = list(graph.vertices)
    edges = []
    for edge, k in zip(graph.edges, spec.counts):
        if k == 0:
            edges.append(edge)
            continue
        chain = [edge.source] + [f"{edge.id}~{j}" for j in range(1, k + 1)] + [edge.target]
        vertices.extend(chain[1:-1])
        for j in range(k + 1):
            edges.append(
                Edge(id=f"{edge.id}.{j + 1}", source=chain[j], target=chain[j + 1], mass=edge.mass)
            )
    result = replace(graph, vertices=tuple(vertices), edges=tuple(edges))
    logger.debug(f"细分完成: N {graph.n_edges} -> {result.n_edges}, h = {result.loop_number}")
    return result


def subdivision_substitution(graph: FeynmanGraph, spec: SubdivisionSpec) -> Dict[sp.Symbol, sp.Expr]:
    """G 的 α_i ↦ G_{s(I)} 中对应各段参数之和"""
    mapping = {}
    position = 1
    for index, k in enumerate(spec.counts, start=1):
        mapping[alpha(index)] = sp.Add(*(alpha(position + j) for j in range(k + 1)))
        position += k + 1
    return mapping
