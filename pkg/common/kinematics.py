"""
运动学参数：质量平方与Mandelstam符号到有理数的映射
"""
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np
import sympy as sp

from .errors import InputError

RationalLike = Union[int, str, sp.Rational]

_LABEL_RE = re.compile(r"^([A-Za-z]+\d*)\^2$")
_SYMBOL_RE = re.compile(r"^([A-Za-z]+\d*)sq$")

SUNRISE_PARAMS: Tuple[str, ...] = ("m1sq", "m2sq", "m3sq", "q1sq")


def param_symbol(label) -> Optional[sp.Symbol]:
    """"m1^2" -> Symbol("m1sq")；0 或 "0" 表示无质量，返回None"""
    if label in (0, "0", None, ""):
        return None
    text = str(label).strip()
    match = _LABEL_RE.match(text)
    if match:
        return sp.Symbol(f"{match.group(1)}sq")
    if _SYMBOL_RE.match(text):
        return sp.Symbol(text)
    raise InputError(f"无法识别的参数标签: {label!r}")


def param_label(symbol: Union[sp.Symbol, str]) -> str:
    """Symbol("m1sq") -> "m1^2" """
    name = str(symbol)
    match = _SYMBOL_RE.match(name)
    if not match:
        return name
    return f"{match.group(1)}^2"


def parse_rational(value: RationalLike) -> sp.Rational:
    """解析 "p/q"、整数或有理数"""
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, bool):
        raise InputError(f"不是有理数: {value!r}")
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, float):
        raise InputError(f"浮点数不能作为精确输入: {value!r}")
    try:
        result = sp.Rational(str(value).strip())
    except (TypeError, ValueError, SyntaxError) as exc:
        raise InputError(f"不是有理数: {value!r}") from exc
    return result


def format_rational(value) -> str:
    """有理数序列化为 "p/q" 或 "p" """
    r = sp.Rational(value)
    if r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"


@dataclass(frozen=True)
class KinematicPoint:
    """参数符号名 -> 精确有理数"""

    values: Mapping[str, sp.Rational] = field(default_factory=dict)

    def __post_init__(self):
        normalized = {str(k): parse_rational(v) for k, v in self.values.items()}
        object.__setattr__(self, "values", dict(sorted(normalized.items())))

    # ---------- 构造 ----------
    @classmethod
    def sunrise(cls, m1sq, m2sq, m3sq, q1sq) -> "KinematicPoint":
        return cls(dict(zip(SUNRISE_PARAMS, (m1sq, m2sq, m3sq, q1sq))))

    @classmethod
    def from_dict(cls, data: Mapping[str, RationalLike]) -> "KinematicPoint":
        values = {}
        for label, value in data.items():
            symbol = param_symbol(label)
            if symbol is None:
                raise InputError(f"运动学文件中的无效键: {label!r}")
            values[str(symbol)] = value
        return cls(values)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "KinematicPoint":
        path = Path(path)
        if not path.exists():
            raise InputError(f"文件不存在: {path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"JSON解析失败: {path}: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def random_sunrise(
        cls, rng: np.random.Generator, bound: int = 1000
    ) -> "KinematicPoint":
        """欧氏区域内的随机有理点（全部为正）"""
        draws = rng.integers(1, bound + 1, size=(4, 2))
        return cls.sunrise(*(sp.Rational(int(n), int(d)) for n, d in draws))

    # ---------- 访问 ----------
    def __getitem__(self, name: str) -> sp.Rational:
        return self.values[str(name)]

    def __contains__(self, name) -> bool:
        return str(name) in self.values

    def get(self, name: str, default=None):
        return self.values.get(str(name), default)

    @property
    def symbols(self) -> Dict[sp.Symbol, sp.Rational]:
        """供 sympy.subs 使用的映射"""
        return {sp.Symbol(k): v for k, v in self.values.items()}

    def sunrise_masses(self) -> Tuple[sp.Rational, sp.Rational, sp.Rational, sp.Rational]:
        missing = [name for name in SUNRISE_PARAMS if name not in self.values]
        if missing:
            raise InputError(f"缺少sunrise运动学参数: {', '.join(missing)}")
        return tuple(self.values[name] for name in SUNRISE_PARAMS)

    def covers(self, names: Iterable) -> bool:
        return all(str(name) in self.values for name in names)

    def to_dict(self) -> Dict[str, str]:
        return {param_label(k): format_rational(v) for k, v in self.values.items()}
