"""
Symanzik多项式命令
输出 Ψ、Ξ 的规范文本以及生成树计数的交叉校验
"""
from typing import Any, Dict

from graphs.kirchhoff import kirchhoff_tree_count
from graphs.symanzik import spanning_trees, symanzik_first, symanzik_second
from . import BaseCommand, CommandRequest
from .loaders import load_graph


class SymanzikCommand(BaseCommand):
    """Symanzik多项式命令"""

    def __init__(self):
        super().__init__(
            name="symanzik",
            description="计算图的第一、第二Symanzik多项式 Ψ_G 与 Ξ_G",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return len(request.inputs) == 1

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        graph = load_graph(request.inputs[0])
        graph.require_connected()
        psi = symanzik_first(graph)
        xi = symanzik_second(graph)
        n_trees = len(spanning_trees(graph))
        kirchhoff = kirchhoff_tree_count(graph)
        self.logger.info(f"🔍 {graph.n_edges} 条边, {n_trees} 棵生成树")
        return {
            "psi": psi.to_string(),
            "xi": xi.to_string(),
            "loop_number": graph.loop_number,
            "n_edges": graph.n_edges,
            "spanning_trees": n_trees,
            "kirchhoff_ok": n_trees == kirchhoff,
        }

    def passed(self, document: Dict[str, Any]) -> bool:
        return document["kirchhoff_ok"]


symanzik_command = SymanzikCommand()
