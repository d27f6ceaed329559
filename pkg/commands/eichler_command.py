"""
正则化Eichler积分命令
"""
from typing import Any, Dict

from config.precision import precision_config
from periods.eichler import eichler_integral
from periods.values import complex_to_dict, parse_complex
from . import BaseCommand, CommandRequest
from .loaders import load_qexpansion


class EichlerCommand(BaseCommand):
    """正则化Eichler积分命令"""

    def __init__(self):
        super().__init__(
            name="eichler",
            description="""∫_τ^{i∞} f(z)(z−τ)^j dz，常数项按切向基点正则化。
--qexp 文件或内置名（delta:N, e4:N, e6:N, g2:N）, --tau a+bi, --power j""",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return bool(request.option("qexp")) and bool(request.option("tau"))

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        ctx = precision_config.make_context(request.prec)
        f = load_qexpansion(request.option("qexp"))
        tau = parse_complex(request.option("tau"), ctx)
        j = int(request.option("power", 0))
        value = eichler_integral(f, tau, j, ctx=ctx)
        return {
            "weight": f.weight,
            "order": f.order,
            "power": j,
            "tau": complex_to_dict(tau),
            "value": complex_to_dict(value),
            "truncation_bound": ctx.nstr(f.truncation_bound(tau, ctx), 5),
        }


eichler_command = EichlerCommand()
