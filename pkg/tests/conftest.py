"""
pytest 公共配置与夹具
"""
import sys
from pathlib import Path

import pytest

# 添加项目根目录到路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from common.kinematics import KinematicPoint  # noqa: E402
from config.precision import precision_config  # noqa: E402

DATA_DIR = project_root / "data"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 数值积分等耗时较长的检查")


@pytest.fixture
def kin_1235():
    """(m1², m2², m3², q1²) = (1, 2, 3, 5)"""
    return KinematicPoint.sunrise(1, 2, 3, 5)


@pytest.fixture
def kin_equal():
    return KinematicPoint.sunrise(1, 1, 1, 1)


@pytest.fixture
def ctx():
    """128位的独立mpmath上下文"""
    return precision_config.make_context(128)


@pytest.fixture
def data_dir():
    return DATA_DIR
