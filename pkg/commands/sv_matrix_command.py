"""
单值周期矩阵命令
"""
from typing import Any, Dict

from config.precision import precision_config
from periods.single_valued import (
    elliptic_period_matrix,
    sv_elliptic_matrix,
    sv_from_period_matrix,
    sv_incomplete_pair,
)
from periods.values import complex_to_dict, parse_complex
from . import BaseCommand, CommandRequest


def _matrix_to_list(matrix):
    return [[complex_to_dict(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


class SvMatrixCommand(BaseCommand):
    """单值周期矩阵命令"""

    def __init__(self):
        super().__init__(
            name="sv-matrix",
            description="""椭圆单值矩阵 f_{r,s}(τ, λ)。
--tau a+bi（必需）, --lam（默认1）, --z1/--z2 给出时附带 (f₃₁, f₃₂)
输出同时给出与 P̄⁻¹P 直接计算的差""",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return bool(request.option("tau"))

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        ctx = precision_config.make_context(request.prec)
        tau = parse_complex(request.option("tau"), ctx)
        lam = parse_complex(request.option("lam", "1"), ctx)
        if ctx.im(tau) <= 0:
            raise ValueError(f"要求 Im τ > 0，实际 τ = {request.option('tau')}")

        f = sv_elliptic_matrix(tau, lam, ctx)
        direct = sv_from_period_matrix(elliptic_period_matrix(tau, lam, ctx), ctx)
        residual = max(abs(f[i, j] - direct[i, j]) for i in range(2) for j in range(2))
        document: Dict[str, Any] = {
            "tau": complex_to_dict(tau),
            "lambda": complex_to_dict(lam),
            "f": _matrix_to_list(f),
            "cross_check_residual": ctx.nstr(residual, 5),
            "cross_check_ok": bool(residual < ctx.mpf(10) ** -10),
        }

        z1, z2 = request.option("z1"), request.option("z2")
        if z1 is not None and z2 is not None:
            f31, f32 = sv_incomplete_pair(tau, parse_complex(z1, ctx), parse_complex(z2, ctx), lam, ctx)
            document["f31"] = complex_to_dict(f31)
            document["f32"] = complex_to_dict(f32)
        return document

    def passed(self, document: Dict[str, Any]) -> bool:
        return document["cross_check_ok"]


sv_matrix_command = SvMatrixCommand()
