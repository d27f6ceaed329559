"""
椭圆周期命令：sunrise三次曲线 → 短Weierstrass型 → 周期与准周期
"""
from typing import Any, Dict

from common.errors import DegenerateKinematicsError
from common.kinematics import format_rational
from periods.elliptic import elliptic_periods, to_weierstrass
from sunrise.boundary import boundary_points
from sunrise.griffiths import specialized_xi
from . import BaseCommand, CommandRequest
from .loaders import load_kin


def _push_points(model, points) -> Dict[str, Any]:
    images = {}
    for label, point in points.items():
        try:
            image = model.push(point.image)
        except DegenerateKinematicsError as exc:
            images[label] = {"error": str(exc)}
            continue
        if image is None:
            images[label] = "infinity"
        else:
            images[label] = {
                "x": format_rational(image[0]),
                "y": format_rational(image[1]),
                "on_curve": model.contains(image),
            }
    return images


class PeriodsCommand(BaseCommand):
    """椭圆周期命令"""

    def __init__(self):
        super().__init__(
            name="periods",
            description="""sunrise曲线的Weierstrass模型、周期 ω₁,ω₂ 与准周期 η₁,η₂。
--base P1..P6 选择有理基点（默认P1）；Legendre与Fricke残差一并输出""",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return request.option("base", "P1") in {f"P{i}" for i in range(1, 7)}

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        kin = load_kin(request.kin)
        xi = specialized_xi(kin)
        points = boundary_points(kin, xi)
        base = points[request.option("base", "P1")]
        model = to_weierstrass(xi, base.image)
        data = elliptic_periods(model.a, model.b, request.prec)
        ctx = data.ctx

        legendre = data.legendre_residual()
        fricke = data.fricke_residual()
        bits = ctx.prec
        self.logger.info(f"🔍 j = {model.j}, Legendre残差 {ctx.nstr(legendre, 3)}")
        return {
            "kin": kin.to_dict(),
            "prec": bits,
            "weierstrass": model.to_dict(),
            "periods": data.to_dict(),
            "fricke_residual": ctx.nstr(fricke, 5),
            "boundary_images": _push_points(model, points),
            "legendre_ok": bool(legendre < ctx.mpf(2) ** (-(bits * 3 // 5))),
            "fricke_ok": bool(fricke < ctx.mpf(10) ** -10),
        }

    def passed(self, document: Dict[str, Any]) -> bool:
        return document["legendre_ok"] and document["fricke_ok"]


periods_command = PeriodsCommand()
