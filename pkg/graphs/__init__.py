"""
Feynman图、生成结构与Symanzik多项式
"""
from .feynman_graph import Edge, Leg, FeynmanGraph, MandelstamDictionary
from .symanzik import (
    TwoForest,
    spanning_trees,
    spanning_two_forests,
    symanzik_first,
    symanzik_second,
)
from .kirchhoff import kirchhoff_oracle_eval, kirchhoff_tree_count
from .subdivision import SubdivisionSpec, subdivide, subdivision_substitution
from . import standard

__all__ = [
    "Edge",
    "Leg",
    "FeynmanGraph",
    "MandelstamDictionary",
    "TwoForest",
    "spanning_trees",
    "spanning_two_forests",
    "symanzik_first",
    "symanzik_second",
    "kirchhoff_oracle_eval",
    "kirchhoff_tree_count",
    "SubdivisionSpec",
    "subdivide",
    "subdivision_substitution",
    "standard",
]
