"""
单纯形数值积分命令
"""
import math
from typing import Any, Dict

from config.settings import COMPUTE_CONFIG
from graphs.standard import sunrise
from graphs.subdivision import SubdivisionSpec, subdivide
from integrands.catalog import sunrise_catalog
from integrands.projform import FULL, ProjForm, feynman_integrand
from periods.quadrature import simplex_quadrature
from periods.tube import tube_checks
from . import BaseCommand, CommandRequest
from .loaders import load_kin

# per(μ_i) = −log(r_i)，r_i 为质量平方比
MU_RATIOS = {"mu1": ("m3sq", "m2sq"), "mu2": ("m1sq", "m3sq"), "mu3": ("m2sq", "m1sq")}

# G_{s(e1)} 自身的积分核，作为 η_G 的细分对照
SUBDIVIDED_FORMS = {"gs_e1": (1, 0, 0)}


def build_form(name: str) -> ProjForm:
    if name in SUBDIVIDED_FORMS:
        graph = subdivide(sunrise(), SubdivisionSpec(SUBDIVIDED_FORMS[name]))
        return feynman_integrand(graph, 2, graph.mandelstam)
    forms = sunrise_catalog()
    if name not in forms or forms[name].omega_kind != FULL:
        choices = [n for n, f in forms.items() if f.omega_kind == FULL] + list(SUBDIVIDED_FORMS)
        raise ValueError(f"未知的形式: {name}（可选 {', '.join(choices)}）")
    return forms[name]


def expected_value(name: str, kin):
    if name not in MU_RATIOS:
        return None
    top, bottom = MU_RATIOS[name]
    return -math.log(float(kin[top]) / float(kin[bottom]))


class QuadratureCommand(BaseCommand):
    """单纯形数值积分命令"""

    def __init__(self):
        super().__init__(
            name="quadrature",
            description="""在欧氏运动学点上对sunrise形式做单纯形积分。
--form omega|eta|nu1..nu3|mu1..mu3|gs_e1, --kin 文件, --tol 误差目标
μ 形式附带与对数周期的比较；--tube 时沿六边形的五对相邻点做管状积分，核对残差坐标""",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return bool(request.option("form")) and (request.tol is None or request.tol > 0)

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        name = request.option("form")
        kin = load_kin(request.kin)
        tol = request.tol or COMPUTE_CONFIG["default_tol"]
        result = simplex_quadrature(build_form(name), kin, tol)
        document = {"kin": kin.to_dict(), "tol": repr(tol), **result.to_dict()}

        expected = expected_value(name, kin)
        if expected is not None:
            deviation = abs(result.value - expected)
            document["expected"] = repr(expected)
            document["agrees"] = bool(deviation <= max(10 * tol, result.error))
        if request.option("tube"):
            checks = tube_checks(name, kin)
            document["tube_checks"] = [check.to_dict() for check in checks]
            document["tube_ok"] = all(check.ok for check in checks)
        self.logger.info(f"🔍 {name}: {result.value:.12g} ± {result.error:.2g}")
        return document

    def passed(self, document: Dict[str, Any]) -> bool:
        return document.get("agrees", True) and document.get("tube_ok", True)


quadrature_command = QuadratureCommand()
