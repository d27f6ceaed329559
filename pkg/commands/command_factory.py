"""
命令工厂
"""
import logging
from typing import Dict, List, Optional

from config.settings import COMMAND_CONFIG
from . import EXIT_INPUT, BaseCommand, CommandRequest, CommandResult, error_document
from .coaction_command import coaction_command
from .eichler_command import eichler_command
from .integrand_command import integrand_command
from .periods_command import periods_command
from .quadrature_command import quadrature_command
from .selftest_command import selftest_command
from .subdivide_command import subdivide_command
from .sv_matrix_command import sv_matrix_command
from .symanzik_command import symanzik_command
from .verify_appendix_command import verify_appendix_command

logger = logging.getLogger(__name__)


class CommandFactory:
    """命令工厂类"""

    def __init__(self):
        self._commands: Dict[str, BaseCommand] = {}
        self._register_commands()

    def _register_commands(self):
        """注册所有启用的命令"""
        for command in (
            symanzik_command,
            subdivide_command,
            integrand_command,
            coaction_command,
            verify_appendix_command,
            periods_command,
            sv_matrix_command,
            quadrature_command,
            eichler_command,
            selftest_command,
        ):
            if COMMAND_CONFIG.get(command.name, {}).get("enabled", True):
                self._commands[command.name] = command
            else:
                logger.info(f"⚪ 命令 {command.name} 已在配置中禁用")

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """获取指定命令"""
        return self._commands.get(name)

    def get_all_commands(self) -> List[BaseCommand]:
        return list(self._commands.values())

    def get_command_names(self) -> List[str]:
        return list(self._commands.keys())

    def get_command_descriptions(self) -> str:
        """获取命令描述"""
        return "\n".join(f"🔧 {name}: {command.description}" for name, command in self._commands.items())


# 创建命令工厂实例
command_factory = CommandFactory()


def execute_command(request: CommandRequest) -> CommandResult:
    """按名称分派；未知命令视为输入错误"""
    command = command_factory.get_command(request.command)
    if command is None:
        logger.error(f"❌ 未知命令: {request.command}")
        return CommandResult(EXIT_INPUT, error_document(request.command, KeyError(f"未知命令: {request.command}")))
    return command(request)
