"""
命令包初始化
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from common.errors import (
    ConvergenceError,
    DegenerateKinematicsError,
    DimensionParityError,
    FeynkitError,
    GraphError,
    InputError,
    VerificationFailure,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

# 输入本身有问题的异常，对应退出码2
INPUT_ERRORS = (InputError, GraphError, DimensionParityError, DegenerateKinematicsError, ValueError)


@dataclass
class CommandRequest:
    """一次子命令调用"""

    command: str
    inputs: List[str] = field(default_factory=list)
    kin: Optional[str] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    tol: Optional[float] = None
    prec: Optional[int] = None
    basis: str = "mu"
    out: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)

    def option(self, name: str, default=None):
        value = self.options.get(name)
        return default if value is None else value


@dataclass
class CommandResult:
    exit_code: int
    document: Dict[str, Any]

    @property
    def success(self) -> bool:
        return self.exit_code == EXIT_OK

    def to_json(self) -> str:
        """键排序，相同输入得到逐字节相同的输出"""
        return json.dumps(self.document, sort_keys=True, ensure_ascii=False, indent=2)


def error_document(command: str, exc: BaseException) -> Dict[str, Any]:
    return {
        "command": command,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }


class BaseCommand:
    """命令基类"""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description
        self.logger = logging.getLogger(f"{__name__}.{name}")

    def validate_input(self, request: CommandRequest) -> bool:
        """验证输入"""
        return True

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        """执行命令，返回JSON文档"""
        raise NotImplementedError

    def passed(self, document: Dict[str, Any]) -> bool:
        """文档中的验证结论；默认没有验证项"""
        return True

    def __call__(self, request: CommandRequest) -> CommandResult:
        """调用命令"""
        try:
            if not self.validate_input(request):
                raise InputError(f"命令 {self.name} 输入验证失败")
            document = self.execute(request)
            if not self.passed(document):
                self.logger.warning(f"❌ 命令 {self.name} 验证未通过")
                return CommandResult(EXIT_FAILURE, document)
            self.logger.info(f"✅ 命令 {self.name} 执行成功")
            return CommandResult(EXIT_OK, document)
        except INPUT_ERRORS as e:
            self.logger.error(f"❌ 命令 {self.name} 输入错误: {e}")
            return CommandResult(EXIT_INPUT, error_document(self.name, e))
        except (VerificationFailure, ConvergenceError, FeynkitError) as e:
            self.logger.error(f"❌ 命令 {self.name} 失败: {e}")
            return CommandResult(EXIT_FAILURE, error_document(self.name, e))
        except Exception as e:
            self.logger.error(f"❌ 命令 {self.name} 执行失败: {e}", exc_info=True)
            return CommandResult(EXIT_FAILURE, error_document(self.name, e))
