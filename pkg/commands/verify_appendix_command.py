"""
系数表随机验证命令
"""
from typing import Any, Dict, List

from config.settings import COMPUTE_CONFIG
from sunrise.appendix import sweep_summary, verify_appendix
from . import BaseCommand, CommandRequest


ERRATUM_COLUMNS = ["point", "form", "shift", "fourth_shift", "a7_printed", "a7_computed", "match"]


def _unique_points(column) -> List[Dict[str, str]]:
    """按抽样顺序去重"""
    seen, points = set(), []
    for point in column:
        key = tuple(sorted(point.items()))
        if key not in seen:
            seen.add(key)
            points.append(point)
    return points


class VerifyAppendixCommand(BaseCommand):
    """系数表随机验证命令"""

    def __init__(self):
        super().__init__(
            name="verify-appendix",
            description="在随机有理运动学点上比较 ν₁,ν₂,ν₃ 的残差坐标与参考系数表，并检查 b′ 矩阵",
        )

    def validate_input(self, request: CommandRequest) -> bool:
        return request.samples is None or request.samples > 0

    def execute(self, request: CommandRequest) -> Dict[str, Any]:
        samples = request.samples or COMPUTE_CONFIG["default_samples"]
        seed = COMPUTE_CONFIG["default_seed"] if request.seed is None else request.seed
        self.logger.info(f"🔍 随机验证: {samples} 个点, seed = {seed}")
        frame = verify_appendix(samples=samples, seed=seed)
        summary = sweep_summary(frame)
        all_match = all(
            (summary["match"], summary["rank_ok"], summary["b_prime_ok"], summary["closure_ok"])
        )
        return {
            "all_match": all_match,
            "samples": samples,
            "seed": seed,
            "summary": summary,
            "points": _unique_points(frame["point"]),
            # 每行的 δ 与第7分量的两种取值
            "erratum": [
                {**record, "match": bool(record["match"])}
                for record in frame[ERRATUM_COLUMNS].to_dict(orient="records")
            ],
        }

    def passed(self, document: Dict[str, Any]) -> bool:
        return document["all_match"]


verify_appendix_command = VerifyAppendixCommand()
