"""
常用图：sunrise、bubble、三角形、tadpole、路径以及随机连通多重图
"""
import itertools
from typing import Optional

import numpy as np

from .feynman_graph import Edge, FeynmanGraph, Leg, MandelstamDictionary


def sunrise(massive: bool = True) -> FeynmanGraph:
    """两顶点三条平行边，外动量 q1 进 v1、q2 进 v2"""
    edges = tuple(
        Edge(id=f"e{i}", source="v1", target="v2", mass=f"m{i}sq" if massive else None)
        for i in (1, 2, 3)
    )
    legs = (Leg("v1", "q1"), Leg("v2", "q2"))
    mandelstam = MandelstamDictionary({("q1",): "q1sq"}, ["q1", "q2"])
    return FeynmanGraph(vertices=("v1", "v2"), edges=edges, legs=legs, mandelstam=mandelstam)


def bubble(massive: bool = False) -> FeynmanGraph:
    """单圈两边；massive=False 时质量与动量都为0"""
    edges = tuple(
        Edge(id=f"e{i}", source="v1", target="v2", mass=f"m{i}sq" if massive else None)
        for i in (1, 2)
    )
    if not massive:
        return FeynmanGraph(vertices=("v1", "v2"), edges=edges)
    legs = (Leg("v1", "q1"), Leg("v2", "q2"))
    mandelstam = MandelstamDictionary({("q1",): "q1sq"}, ["q1", "q2"])
    return FeynmanGraph(vertices=("v1", "v2"), edges=edges, legs=legs, mandelstam=mandelstam)


def triangle(massive: bool = False) -> FeynmanGraph:
    vertices = ("v1", "v2", "v3")
    edges = (
        Edge("e1", "v1", "v2", "m1sq" if massive else None),
        Edge("e2", "v2", "v3", "m2sq" if massive else None),
        Edge("e3", "v3", "v1", "m3sq" if massive else None),
    )
    legs = tuple(Leg(v, f"q{i}") for i, v in enumerate(vertices, start=1))
    mandelstam = MandelstamDictionary(
        {("q1",): "q1sq", ("q2",): "q2sq", ("q3",): "q3sq"}, ["q1", "q2", "q3"]
    )
    return FeynmanGraph(vertices=vertices, edges=edges, legs=legs, mandelstam=mandelstam)


def tadpole(massive: bool = True) -> FeynmanGraph:
    """单顶点自环"""
    edges = (Edge("e1", "v1", "v1", "m1sq" if massive else None),)
    return FeynmanGraph(vertices=("v1",), edges=edges)


def single_edge() -> FeynmanGraph:
    return FeynmanGraph(vertices=("v1", "v2"), edges=(Edge("e1", "v1", "v2"),))


def path_graph(n_edges: int) -> FeynmanGraph:
    vertices = tuple(f"v{i}" for i in range(1, n_edges + 2))
    edges = tuple(
        Edge(f"e{i}", vertices[i - 1], vertices[i]) for i in range(1, n_edges + 1)
    )
    return FeynmanGraph(vertices=vertices, edges=edges)


def random_graph(
    rng: np.random.Generator,
    n_vertices: int,
    n_edges: int,
    n_legs: int = 3,
    massive: bool = True,
) -> FeynmanGraph:
    """
    随机连通多重图：先取随机生成树保证连通，再加随机边（允许平行边，不含自环）。
    外腿挂在随机顶点上，所有非平凡二分都有Mandelstam符号。
    """
    if n_edges < n_vertices - 1:
        raise ValueError("边数不足以连通")
    if n_vertices < 2:
        raise ValueError("至少需要两个顶点")
    vertices = tuple(f"v{i}" for i in range(1, n_vertices + 1))
    pairs = []
    order = rng.permutation(n_vertices)
    for position in range(1, n_vertices):
        parent = order[int(rng.integers(0, position))]
        pairs.append((order[position], parent))
    while len(pairs) < n_edges:
        i, j = rng.choice(n_vertices, size=2, replace=False)
        pairs.append((i, j))
    order_edges = rng.permutation(len(pairs))
    edges = tuple(
        Edge(
            id=f"e{k}",
            source=vertices[int(pairs[idx][0])],
            target=vertices[int(pairs[idx][1])],
            mass=f"m{k}sq" if massive else None,
        )
        for k, idx in enumerate(order_edges, start=1)
    )
    n_legs = min(n_legs, n_vertices)
    leg_vertices = rng.choice(n_vertices, size=n_legs, replace=False)
    labels = [f"q{i}" for i in range(1, n_legs + 1)]
    legs = tuple(Leg(vertices[int(v)], label) for v, label in zip(leg_vertices, labels))
    return FeynmanGraph(
        vertices=vertices,
        edges=edges,
        legs=legs,
        mandelstam=full_mandelstam(labels),
    )


def full_mandelstam(labels) -> MandelstamDictionary:
    """每个非平凡二分一个参数：单腿 q{i}sq，多腿 s{编号}sq"""
    labels = list(labels)
    entries = {}
    for size in range(1, len(labels)):
        for side in itertools.combinations(labels, size):
            if len(side) == 1:
                name = f"{side[0]}sq"
            else:
                name = "s" + "".join(label[1:] for label in side) + "sq"
            complement = tuple(x for x in labels if x not in side)
            # 对称：补集已登记则跳过
            if frozenset(complement) in {frozenset(k) for k in entries}:
                continue
            entries[side] = name
    return MandelstamDictionary(entries, labels)


def named_graph(name: str) -> Optional[FeynmanGraph]:
    builders = {
        "sunrise": sunrise,
        "bubble": bubble,
        "triangle": triangle,
        "tadpole": tadpole,
    }
    builder = builders.get(name)
    return builder() if builder else None
