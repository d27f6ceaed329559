"""
异常层次
"""


class FeynkitError(Exception):
    """所有领域异常的基类"""


class GraphError(FeynkitError):
    """图结构错误（不连通、缺少Mandelstam条目等）"""


class DimensionParityError(FeynkitError):
    """时空维数导致非整数指数"""

    def __init__(self, detail: str = ""):
        message = "dimension parity"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class DegenerateKinematicsError(FeynkitError):
    """运动学点退化：曲线奇异、边界点非有理、图卡失败等"""


class ConvergenceError(FeynkitError):
    """数值过程未收敛"""


class InputError(FeynkitError):
    """命令行输入错误（文件缺失、格式错误）"""


class VerificationFailure(FeynkitError):
    """验收检查失败"""
