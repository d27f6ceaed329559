"""
边细分命令
"""
from typing import Any, Dict

from graphs.subdivision import SubdivisionSpec, subdivide, subdivision_substitution
from graphs.symanzik import symanzik_first, symanzik_second
from . import BaseCommand, CommandRequest
from .loaders import load_graph


class SubdivideCommand(BaseCommand):
    """边细分命令"""

    def __init__(self):
        super().__init__(
            name="subdivide",
            description="""把边换成同质量的路径 G_{s(I)}。
细分规格: --counts "e1:1,e2:2"
输出细分图以及 Ψ、Ξ 在 α_i ↦ Σ段参数 下的代换恒等式检查""",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return len(request.inputs) == 1 and bool(request.option("counts"))

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        graph = load_graph(request.inputs[0])
        spec = SubdivisionSpec.parse(graph, request.option("counts"))
        result = subdivide(graph, spec)
        mapping = subdivision_substitution(graph, spec)

        psi_ok = symanzik_first(graph).substitute(mapping) == symanzik_first(result)
        xi_ok = symanzik_second(graph).substitute(mapping) == symanzik_second(result)
        self.logger.info(f"🔍 细分 {spec.counts}: N = {result.n_edges}")
        return {
            "counts": list(spec.counts),
            "graph": result.to_dict(),
            "psi": symanzik_first(result).to_string(),
            "xi": symanzik_second(result).to_string(),
            "substitution_ok": bool(psi_ok and xi_ok),
        }

    def passed(self, document: Dict[str, Any]) -> bool:
        return document["substitution_ok"]


subdivide_command = SubdivideCommand()
