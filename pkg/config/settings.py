"""
项目配置文件
"""
import os
import sys
import logging
import logging.handlers
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# 加载环境变量（LOG_LEVEL、FEYNKIT_PREC、FEYNKIT_LOG_FILE）
load_dotenv()

# 项目根目录
BASE_DIR = Path(__file__).parent.parent

# 路径配置
DATA_DIR = BASE_DIR / "data"
LOG_DIR = DATA_DIR / "logs"

# 计算配置
COMPUTE_CONFIG: Dict[str, Any] = {
    "default_prec": 128,  # 二进制位
    "default_tol": 1e-8,
    "default_seed": 0,
    "default_samples": 20,
    "kin_bound": 1000,  # 随机运动学点分子分母上限
    "max_resample": 50,
    "quadrature": {
        "start_nodes": 12,
        "max_nodes_2d": 384,
        "max_nodes_3d": 96,
    },
    "tube": {
        "n_path": 400,
        "n_circle": 48,
        "radius": 1e-3,
        "track_steps": 20000,
        "tolerance": 5e-3,
    },
    "q_series_max_terms": 4000,
}

# 子命令配置
COMMAND_CONFIG: Dict[str, Any] = {
    "symanzik": {"enabled": True, "description": "Symanzik多项式计算"},
    "subdivide": {"enabled": True, "description": "边细分"},
    "integrand": {"enabled": True, "description": "Feynman积分形式与细分拉回"},
    "coaction": {"enabled": True, "description": "sunrise余作用表"},
    "verify-appendix": {"enabled": True, "description": "系数表随机验证"},
    "periods": {"enabled": True, "description": "椭圆周期与准周期"},
    "sv-matrix": {"enabled": True, "description": "单值周期矩阵"},
    "quadrature": {"enabled": True, "description": "单纯形数值积分"},
    "eichler": {"enabled": True, "description": "正则化Eichler积分"},
    "selftest": {"enabled": True, "description": "验收自检"},
}

# 日志配置；FEYNKIT_LOG_FILE 设为空串时不写文件
LOG_CONFIG: Dict[str, Any] = {
    "level": os.getenv("LOG_LEVEL", "INFO"),
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "date_format": "%Y-%m-%d %H:%M:%S",
    "file": os.getenv("FEYNKIT_LOG_FILE", str(LOG_DIR / "feynkit.log")),
    "max_bytes": 10 * 1024 * 1024,  # 10MB
    "backup_count": 5,
}


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """根logger：stderr 一份，滚动文件一份；stdout 留给 JSON 文档"""
    name = (level or LOG_CONFIG["level"]).upper()
    log_level = getattr(logging, name, logging.INFO)
    formatter = logging.Formatter(LOG_CONFIG["format"], datefmt=LOG_CONFIG["date_format"])

    root = logging.getLogger()
    root.setLevel(log_level)
    root.handlers.clear()

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(formatter)
    root.addHandler(console)

    if LOG_CONFIG["file"]:
        Path(LOG_CONFIG["file"]).parent.mkdir(parents=True, exist_ok=True)
        rotating = logging.handlers.RotatingFileHandler(
            LOG_CONFIG["file"],
            maxBytes=LOG_CONFIG["max_bytes"],
            backupCount=LOG_CONFIG["backup_count"],
            encoding="utf-8",
        )
        rotating.setFormatter(formatter)
        root.addHandler(rotating)

    return root


# 初始化日志
logger = setup_logging()
