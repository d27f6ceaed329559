"""
命令输入的读取：图文件、运动学文件、q展开文件
"""
import json
from pathlib import Path
from typing import Optional

from common.errors import InputError
from common.kinematics import KinematicPoint
from graphs.feynman_graph import FeynmanGraph
from graphs.standard import named_graph
from periods.eisenstein import QExpansion, delta_expansion, e4_expansion, e6_expansion, g2_expansion

# 内置q展开："delta:40" 之类
BUILTIN_EXPANSIONS = {
    "delta": delta_expansion,
    "e4": e4_expansion,
    "e6": e6_expansion,
    "g2": g2_expansion,
}


def load_graph(source: Optional[str]) -> FeynmanGraph:
    """文件路径优先，否则按内置图名查找"""
    if not source:
        raise InputError("缺少图文件参数")
    path = Path(source)
    if path.exists():
        return FeynmanGraph.from_file(path)
    graph = named_graph(source)
    if graph is None:
        raise InputError(f"文件不存在: {source}")
    return graph


def load_kin(source: Optional[str]) -> KinematicPoint:
    if not source:
        raise InputError("缺少 --kin 参数")
    return KinematicPoint.from_file(source)


def load_qexpansion(source: Optional[str]) -> QExpansion:
    """JSON文件 {"weight": w, "coefficients": [...]} 或内置名 "name:N" """
    if not source:
        raise InputError("缺少 --qexp 参数")
    path = Path(source)
    if path.exists():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            return QExpansion.from_list(data["coefficients"], data["weight"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"q展开文件格式错误: {path}: {exc}") from exc
    name, _, order = source.partition(":")
    builder = BUILTIN_EXPANSIONS.get(name)
    if builder is None:
        raise InputError(f"文件不存在: {source}")
    try:
        return builder(int(order) if order else 40)
    except ValueError as exc:
        raise InputError(f"无效的截断阶数: {source}") from exc
