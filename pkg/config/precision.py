"""
数值精度配置管理
"""
import os
from typing import Dict, Optional, List

import mpmath

from .settings import COMPUTE_CONFIG


class PrecisionConfig:
    """精度配置管理类"""

    # ========== 环境变量 ==========
    FEYNKIT_PREC: Optional[str] = os.getenv("FEYNKIT_PREC")

    # ========== 精度档位 ==========
    PRECISION_PROFILES: Dict[str, Dict] = {
        "fast": {
            "bits": 64,
            "description": "快速检查，约19位十进制",
            "recommended_for": ["开发调试"],
        },
        "default": {
            "bits": 128,
            "description": "默认精度，Legendre残差可达1e-20以下",
            "recommended_for": ["验收测试", "周期计算"],
        },
        "strict": {
            "bits": 192,
            "description": "高精度，用于交叉验证",
            "recommended_for": ["误差分析"],
        },
    }

    DEFAULT_PROFILE: str = "default"

    @classmethod
    def validate_config(cls) -> bool:
        """验证环境变量中的精度设置：档位名或不少于53的整数"""
        if cls.FEYNKIT_PREC is None or cls.FEYNKIT_PREC in cls.PRECISION_PROFILES:
            return True
        try:
            bits = int(cls.FEYNKIT_PREC)
        except ValueError:
            print(f"❌ FEYNKIT_PREC 既不是整数也不是档位名: {cls.FEYNKIT_PREC}")
            return False
        if bits < 53:
            print(f"❌ FEYNKIT_PREC 至少为53位，当前: {bits}")
            return False
        return True

    @classmethod
    def get_profile_info(cls, profile: str = None) -> Dict:
        """获取精度档位信息"""
        if profile is None:
            profile = cls.DEFAULT_PROFILE

        if profile in cls.PRECISION_PROFILES:
            return cls.PRECISION_PROFILES[profile].copy()
        else:
            raise ValueError(f"不支持的精度档位: {profile}")

    @classmethod
    def list_available_profiles(cls) -> List[str]:
        """获取可用精度档位列表"""
        return list(cls.PRECISION_PROFILES.keys())

    @classmethod
    def resolve_bits(cls, bits: Optional[int] = None) -> int:
        """显式参数 > FEYNKIT_PREC（整数或档位名）> 默认值"""
        if bits is not None:
            return int(bits)
        if cls.FEYNKIT_PREC and cls.validate_config():
            if cls.FEYNKIT_PREC in cls.PRECISION_PROFILES:
                return cls.get_profile_info(cls.FEYNKIT_PREC)["bits"]
            return int(cls.FEYNKIT_PREC)
        return COMPUTE_CONFIG["default_prec"]

    @classmethod
    def make_context(cls, bits: Optional[int] = None) -> mpmath.MPContext:
        """创建独立的mpmath上下文，不修改全局mp"""
        ctx = mpmath.MPContext()
        ctx.prec = cls.resolve_bits(bits)
        return ctx


# 创建配置实例
precision_config = PrecisionConfig()
