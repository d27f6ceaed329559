"""
积分形式命令：Feynman积分形式、细分拉回与sunrise形式目录
"""
from typing import Any, Dict

from graphs.subdivision import SubdivisionSpec
from integrands.catalog import sunrise_catalog
from integrands.projform import feynman_integrand, subdivision_pullback, verify_pullback_identity
from . import BaseCommand, CommandRequest
from .loaders import load_graph


class IntegrandCommand(BaseCommand):
    """积分形式命令"""

    def __init__(self):
        super().__init__(
            name="integrand",
            description="""构造射影积分形式 A·Ω_G/(Ψ^a Ξ^b)。
--dim d          时空维数（默认2）
--counts I       给出时输出细分拉回，--dim-sub 为细分图的维数（默认 d+2）
输入为 "catalog" 时输出完整的sunrise形式目录""",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return len(request.inputs) == 1

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        source = request.inputs[0]
        if source == "catalog":
            forms = sunrise_catalog(choice="all")
            return {"catalog": {name: form.to_dict() for name, form in forms.items()}}

        graph = load_graph(source)
        d = int(request.option("dim", 2))
        document: Dict[str, Any] = {"form": feynman_integrand(graph, d).to_dict()}

        counts = request.option("counts")
        if counts:
            d_sub = int(request.option("dim_sub", d + 2))
            spec = SubdivisionSpec.parse(graph, counts)
            document["pullback"] = subdivision_pullback(graph, spec, d_sub, d).to_dict()
            if graph.n_edges >= 2:
                document["identity_ok"] = verify_pullback_identity(graph, d_sub, d)
        return document

    def passed(self, document: Dict[str, Any]) -> bool:
        return document.get("identity_ok", True)


integrand_command = IntegrandCommand()
