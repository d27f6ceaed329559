"""
sunrise余作用表命令
"""
from typing import Any, Dict

from sunrise.coaction import BASES, coaction_table
from . import BaseCommand, CommandRequest
from .loaders import load_kin


class CoactionCommand(BaseCommand):
    """余作用表命令"""

    def __init__(self):
        super().__init__(
            name="coaction",
            description="在给定运动学点计算sunrise的余作用表（--basis mu|nu）",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return request.basis in BASES

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        kin = load_kin(request.kin)
        table = coaction_table(kin, request.basis)
        self.logger.info(f"🔍 余作用表: {len(table.rows)} 行 (basis = {request.basis})")
        return table.to_dict()


coaction_command = CoactionCommand()
