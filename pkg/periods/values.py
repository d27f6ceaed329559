"""
复数的解析与JSON序列化 {"re": "...", "im": "..."}
"""
import re
from typing import Dict, Optional

import mpmath

from common.errors import InputError

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?"
    r"\s*(?:(?P<im>[+-]\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*[ij])?\s*$"
)


def parse_complex(text: str, ctx: Optional[mpmath.MPContext] = None) -> mpmath.mpc:
    """解析 "a+bi"、"bi"、"a" 形式的字符串"""
    ctx = ctx or mpmath.mp
    raw = str(text).strip().replace(" ", "")
    if not raw:
        raise InputError("空的复数输入")
    # 纯虚数 "2i" / "-i"
    pure = re.fullmatch(r"([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij]", raw)
    if pure:
        coefficient = pure.group(1)
        if coefficient in ("", "+", "-"):
            coefficient += "1"
        return ctx.mpc(0, ctx.mpf(coefficient))
    match = _COMPLEX_RE.match(raw)
    if not match or (match.group("re") is None and match.group("im") is None):
        raise InputError(f"无法解析复数: {text!r}")
    real = ctx.mpf(match.group("re")) if match.group("re") else ctx.mpf(0)
    imag = ctx.mpf(0)
    if match.group("im"):
        coefficient = match.group("im").replace(" ", "")
        if coefficient in ("+", "-"):
            coefficient += "1"
        imag = ctx.mpf(coefficient)
    return ctx.mpc(real, imag)


def _context(value) -> mpmath.MPContext:
    return getattr(value, "context", mpmath.mp)


def complex_to_dict(value, digits: int = 30) -> Dict[str, str]:
    """保持 value 自身上下文的精度"""
    ctx = _context(value)
    value = ctx.mpc(value)
    return {"re": ctx.nstr(value.real, digits), "im": ctx.nstr(value.imag, digits)}


def real_to_str(value, digits: int = 30) -> str:
    ctx = _context(value)
    return ctx.nstr(ctx.mpf(value), digits)
