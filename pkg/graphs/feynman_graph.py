"""
Feynman图表示
内边按给定顺序编号，第i条边对应参数 a{i}
"""
import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx
import sympy as sp

from algebra.polynomial import alpha
from common.errors import GraphError, InputError
from common.kinematics import param_label, param_symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge:
    """内边；mass为质量平方符号名（如 m1sq），None表示无质量"""

    id: str
    source: str
    target: str
    mass: Optional[str] = None

    @property
    def is_self_loop(self) -> bool:
        return self.source == self.target

    @property
    def mass_symbol(self) -> Optional[sp.Symbol]:
        return sp.Symbol(self.mass) if self.mass else None


@dataclass(frozen=True)
class Leg:
    vertex: str
    momentum: str


class MandelstamDictionary:
    """外腿标签的二分 -> 动量平方参数，T₁与T₂对称"""

    def __init__(self, entries: Mapping[Iterable[str], str], labels: Iterable[str]):
        self.labels: FrozenSet[str] = frozenset(labels)
        self._entries: Dict[FrozenSet[str], str] = {}
        for side, symbol in entries.items():
            key = self._canonical(frozenset(side))
            previous = self._entries.get(key)
            if previous is not None and previous != symbol:
                raise GraphError(
                    f"Mandelstam条目冲突: {sorted(side)} -> {previous} / {symbol}"
                )
            self._entries[key] = symbol

    def _canonical(self, side: FrozenSet[str]) -> FrozenSet[str]:
        unknown = side - self.labels
        if unknown:
            raise GraphError(f"未知的动量标签: {sorted(unknown)}")
        other = self.labels - side
        return min(side, other, key=lambda s: (len(s), sorted(s)))

    def lookup(self, side: Iterable[str]) -> Optional[sp.Symbol]:
        key = self._canonical(frozenset(side))
        symbol = self._entries.get(key)
        return sp.Symbol(symbol) if symbol else None

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MandelstamDictionary):
            return NotImplemented
        return self.labels == other.labels and self._entries == other._entries

    def to_dict(self) -> Dict[str, str]:
        return {
            ",".join(sorted(side)): param_label(symbol)
            for side, symbol in sorted(self._entries.items(), key=lambda kv: sorted(kv[0]))
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, str], labels: Iterable[str]) -> "MandelstamDictionary":
        entries = {}
        for key, label in data.items():
            side = [part.strip() for part in key.split(",") if part.strip()]
            symbol = param_symbol(label)
            if symbol is None:
                continue
            entries[tuple(side)] = str(symbol)
        return cls(entries, labels)


@dataclass(frozen=True)
class FeynmanGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    legs: Tuple[Leg, ...] = ()
    mandelstam: Optional[MandelstamDictionary] = field(default=None, compare=False)

    def __post_init__(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise GraphError("顶点重复")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError("内边id重复")
        for edge in self.edges:
            if edge.source not in vertex_set or edge.target not in vertex_set:
                raise GraphError(f"边 {edge.id} 的端点不在顶点集中")
        labels = [leg.momentum for leg in self.legs]
        if len(set(labels)) != len(labels):
            raise GraphError("动量标签重复")
        for leg in self.legs:
            if leg.vertex not in vertex_set:
                raise GraphError(f"外腿 {leg.momentum} 连接到未知顶点 {leg.vertex}")
        if self.mandelstam is None:
            object.__setattr__(self, "mandelstam", MandelstamDictionary({}, labels))

    # ---------- 基本量 ----------
    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def loop_number(self) -> int:
        """h = N − |V| + 1（连通图）"""
        return self.n_edges - len(self.vertices) + 1

    @property
    def momentum_labels(self) -> FrozenSet[str]:
        return frozenset(leg.momentum for leg in self.legs)

    def alpha(self, edge: Union[str, Edge, int]) -> sp.Symbol:
        return alpha(self.edge_index(edge))

    def alphas(self) -> List[sp.Symbol]:
        return [alpha(i) for i in range(1, self.n_edges + 1)]

    def edge_index(self, edge: Union[str, Edge, int]) -> int:
        """1起始的边编号"""
        if isinstance(edge, int):
            if not 1 <= edge <= self.n_edges:
                raise GraphError(f"边编号越界: {edge}")
            return edge
        edge_id = edge.id if isinstance(edge, Edge) else edge
        for index, e in enumerate(self.edges, start=1):
            if e.id == edge_id:
                return index
        raise GraphError(f"未知的边: {edge_id}")

    def edge(self, edge: Union[str, int]) -> Edge:
        return self.edges[self.edge_index(edge) - 1]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.source, edge.target, key=edge.id, mass=edge.mass)
        return graph

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return nx.is_connected(self.to_networkx())

    def require_connected(self):
        if not self.is_connected():
            raise GraphError("not connected")

    def legs_at(self, vertices: Iterable[str]) -> FrozenSet[str]:
        vertex_set = set(vertices)
        return frozenset(leg.momentum for leg in self.legs if leg.vertex in vertex_set)

    # ---------- 删除与收缩 ----------
    def delete_edge(self, edge: Union[str, int]) -> "FeynmanGraph":
        target = self.edge(edge)
        edges = tuple(e for e in self.edges if e.id != target.id)
        return replace(self, edges=edges)

    def contract_edge(self, edge: Union[str, int]) -> "FeynmanGraph":
        """把target并入source；平行边变为自环"""
        target = self.edge(edge)
        if target.is_self_loop:
            raise GraphError(f"不能收缩自环 {target.id}")
        keep, gone = target.source, target.target

        def relink(v: str) -> str:
            return keep if v == gone else v

        edges = tuple(
            replace(e, source=relink(e.source), target=relink(e.target))
            for e in self.edges
            if e.id != target.id
        )
        legs = tuple(replace(leg, vertex=relink(leg.vertex)) for leg in self.legs)
        vertices = tuple(v for v in self.vertices if v != gone)
        return replace(self, vertices=vertices, edges=edges, legs=legs)

    def is_bridge(self, edge: Union[str, int]) -> bool:
        target = self.edge(edge)
        if target.is_self_loop:
            return False
        return not self.delete_edge(target.id).is_connected()

    # ---------- 序列化 ----------
    def to_dict(self) -> Dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {
                    "id": e.id,
                    "from": e.source,
                    "to": e.target,
                    "mass": param_label(e.mass) if e.mass else 0,
                }
                for e in self.edges
            ],
            "legs": [{"vertex": leg.vertex, "momentum": leg.momentum} for leg in self.legs],
            "mandelstam": self.mandelstam.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "FeynmanGraph":
        try:
            vertices = tuple(str(v) for v in data["vertices"])
            edges = []
            for item in data["edges"]:
                symbol = param_symbol(item.get("mass", 0))
                edges.append(
                    Edge(
                        id=str(item["id"]),
                        source=str(item["from"]),
                        target=str(item["to"]),
                        mass=str(symbol) if symbol is not None else None,
                    )
                )
            legs = tuple(
                Leg(vertex=str(item["vertex"]), momentum=str(item["momentum"]))
                for item in data.get("legs", [])
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"图文件格式错误: {exc}") from exc
        labels = [leg.momentum for leg in legs]
        mandelstam = MandelstamDictionary.from_dict(data.get("mandelstam", {}), labels)
        return cls(vertices=vertices, edges=tuple(edges), legs=legs, mandelstam=mandelstam)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "FeynmanGraph":
        path = Path(path)
        if not path.exists():
            raise InputError(f"文件不存在: {path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"JSON解析失败: {path}: {exc}") from exc
        return cls.from_dict(data)
