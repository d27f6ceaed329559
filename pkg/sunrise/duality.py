"""
对偶系数 b_{i,k}：Σ_k a_{j,k}·b_{i,k} = δ_ij，b_{i,6} = b_{i,7} = 0
3×5 方程组欠定（解空间维数2），取行空间中的解 b = Aᵀ(AAᵀ)⁻¹
"""
import logging
from dataclasses import dataclass
from typing import Dict, Sequence, Union

import sympy as sp

from common.errors import DegenerateKinematicsError
from common.kinematics import format_rational
from .residues import ResidueDecomposition

logger = logging.getLogger(__name__)

Rows = Sequence[Union[ResidueDecomposition, Sequence[sp.Rational]]]


def _block(rows: Rows) -> sp.Matrix:
    data = []
    for row in rows:
        values = row.a if isinstance(row, ResidueDecomposition) else tuple(row)
        if len(values) not in (5, 7):
            raise ValueError(f"a-向量长度必须为5或7: {len(values)}")
        data.append([sp.Rational(v) for v in values[:5]])
    return sp.Matrix(data)


def check_duality(rows: Rows, b: sp.Matrix) -> bool:
    """A·b = I（A 为 a-向量前五个分量，b 为 5×r）"""
    A = _block(rows)
    b = sp.Matrix(b)
    if b.shape != (5, A.rows):
        raise ValueError(f"b 的形状必须为 (5, {A.rows})，实际 {b.shape}")
    return (A * b - sp.eye(A.rows)).is_zero_matrix


@dataclass(frozen=True)
class DualCoefficients:
    b: sp.Matrix  # 第 i 列为 b_{i,1..5}
    certificate: bool
    nullspace_dim: int

    def column(self, i: int):
        return [self.b[k, i] for k in range(self.b.rows)] + [sp.Integer(0), sp.Integer(0)]

    def to_dict(self) -> Dict:
        return {
            "b": [[format_rational(x) for x in self.column(i)] for i in range(self.b.cols)],
            "certificate": self.certificate,
            "nullspace_dim": self.nullspace_dim,
        }


def dual_coefficients(rows: Rows) -> DualCoefficients:
    A = _block(rows)
    if A.rank() < A.rows:
        raise DegenerateKinematicsError(f"degenerate kinematics: a-矩阵秩不足 ({A.rank()} < {A.rows})")
    b = A.T * (A * A.T).inv()
    certificate = check_duality(rows, b)
    nullspace_dim = len(A.nullspace())
    if not certificate:
        logger.warning("对偶方程验证失败")
    return DualCoefficients(b=b, certificate=certificate, nullspace_dim=nullspace_dim)
