"""
配置包
"""
from .settings import (
    BASE_DIR,
    DATA_DIR,
    COMPUTE_CONFIG,
    COMMAND_CONFIG,
    LOG_CONFIG,
    setup_logging,
)
from .precision import PrecisionConfig, precision_config

__all__ = [
    "BASE_DIR",
    "DATA_DIR",
    "COMPUTE_CONFIG",
    "COMMAND_CONFIG",
    "LOG_CONFIG",
    "setup_logging",
    "PrecisionConfig",
    "precision_config",
]
