"""
精确稀疏多元多项式
α变量记为 a1, a2, ...；运动学参数记为 m1sq, q1sq 等
"""
import itertools
import logging
import re
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp

from common.kinematics import KinematicPoint, format_rational

logger = logging.getLogger(__name__)

_ALPHA_RE = re.compile(r"^a(\d+)$")

PolyLike = Union["MPoly", sp.Expr, int, sp.Rational]


def alpha(index: int) -> sp.Symbol:
    """第index条内边的Schwinger参数"""
    return sp.Symbol(f"a{index}")


def alphas(n: int) -> List[sp.Symbol]:
    return [alpha(i) for i in range(1, n + 1)]


def is_alpha(symbol: sp.Symbol) -> bool:
    return bool(_ALPHA_RE.match(str(symbol)))


def variable_key(symbol: sp.Symbol) -> Tuple[int, int, str]:
    """固定变量顺序：α按编号在前，参数按名字在后"""
    match = _ALPHA_RE.match(str(symbol))
    if match:
        return (0, int(match.group(1)), "")
    return (1, 0, str(symbol))


def sort_variables(symbols: Iterable[sp.Symbol]) -> List[sp.Symbol]:
    return sorted(set(symbols), key=variable_key)


def _as_expr(value: PolyLike) -> sp.Expr:
    if isinstance(value, MPoly):
        return value.expr
    return sp.sympify(value)


class MPoly:
    """有理系数多元多项式（值语义，不可变）"""

    __slots__ = ("_expr",)

    def __init__(self, expr: PolyLike = 0):
        expr = sp.expand(_as_expr(expr))
        if not expr.is_polynomial(*expr.free_symbols):
            raise ValueError(f"不是多项式: {expr}")
        object.__setattr__(self, "_expr", expr)

    def __setattr__(self, key, value):
        raise AttributeError("MPoly 不可变")

    @property
    def expr(self) -> sp.Expr:
        return self._expr

    # ---------- 算术 ----------
    def __add__(self, other: PolyLike) -> "MPoly":
        return MPoly(self._expr + _as_expr(other))

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> "MPoly":
        return MPoly(self._expr - _as_expr(other))

    def __rsub__(self, other: PolyLike) -> "MPoly":
        return MPoly(_as_expr(other) - self._expr)

    def __mul__(self, other: PolyLike) -> "MPoly":
        return MPoly(self._expr * _as_expr(other))

    __rmul__ = __mul__

    def __neg__(self) -> "MPoly":
        return MPoly(-self._expr)

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"只支持非负整数幂: {exponent}")
        return MPoly(self._expr**exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (MPoly, int, sp.Expr)):
            return NotImplemented
        return sp.expand(self._expr - _as_expr(other)) == 0

    def __hash__(self) -> int:
        return hash(self._expr)

    def __repr__(self) -> str:
        return f"MPoly({self.to_string()!r})"

    def __str__(self) -> str:
        return self.to_string()

    # ---------- 结构 ----------
    @property
    def variables(self) -> List[sp.Symbol]:
        return sort_variables(self._expr.free_symbols)

    @property
    def alpha_variables(self) -> List[sp.Symbol]:
        return [v for v in self.variables if is_alpha(v)]

    @property
    def parameters(self) -> List[sp.Symbol]:
        return [v for v in self.variables if not is_alpha(v)]

    def is_zero(self) -> bool:
        return self._expr == 0

    def terms(self, gens: Optional[Sequence[sp.Symbol]] = None):
        """(指数向量, 系数) 列表，按分次字典序降序"""
        gens = list(gens) if gens is not None else self.variables
        if not gens:
            return [((), self._expr)] if self._expr != 0 else []
        return sp.Poly(self._expr, *gens).terms(order="grlex")

    def degree(self, variables: Optional[Sequence[sp.Symbol]] = None) -> int:
        """关于给定变量（默认α变量）的总次数；零多项式返回-1"""
        if self.is_zero():
            return -1
        gens = list(variables) if variables is not None else self.alpha_variables
        if not gens:
            return 0
        return sp.Poly(self._expr, *gens).total_degree()

    def is_homogeneous(self, variables: Optional[Sequence[sp.Symbol]] = None) -> bool:
        if self.is_zero():
            return True
        gens = list(variables) if variables is not None else self.alpha_variables
        if not gens:
            return True
        degrees = {sum(exps) for exps, _ in sp.Poly(self._expr, *gens).terms()}
        return len(degrees) == 1

    def coefficient(self, monomial: PolyLike, variables: Sequence[sp.Symbol]) -> sp.Expr:
        """单项式在给定变量下的系数（可含参数）"""
        poly = sp.Poly(self._expr, *variables)
        exps = sp.Poly(_as_expr(monomial), *variables).monoms()[0]
        return poly.coeff_monomial(exps)

    # ---------- 运算 ----------
    def substitute(self, mapping: Mapping[sp.Symbol, PolyLike]) -> "MPoly":
        """同时代换；未出现在映射中的变量保持不变"""
        if not mapping:
            return self
        sigma = {sp.Symbol(str(k)): _as_expr(v) for k, v in mapping.items()}
        return MPoly(self._expr.xreplace(sigma))

    def partial_derivative(self, variable: sp.Symbol) -> "MPoly":
        return MPoly(sp.diff(self._expr, variable))

    def specialize(self, kin: KinematicPoint) -> "MPoly":
        """把运动学参数换成有理数，α变量保留"""
        missing = [p for p in self.parameters if p not in kin]
        if missing:
            raise ValueError(
                f"运动学点缺少参数: {', '.join(str(p) for p in missing)}"
            )
        return self.substitute(kin.symbols)

    def evaluate(self, assignment: Mapping[sp.Symbol, PolyLike]) -> sp.Rational:
        value = sp.expand(
            self._expr.xreplace(
                {sp.Symbol(str(k)): _as_expr(v) for k, v in assignment.items()}
            )
        )
        if value.free_symbols:
            raise ValueError(
                f"赋值不完整，剩余变量: {sort_variables(value.free_symbols)}"
            )
        if not value.is_Rational:
            raise ValueError(f"求值结果不是有理数: {value}")
        return value

    # ---------- 序列化 ----------
    def to_string(self, gens: Optional[Sequence[sp.Symbol]] = None) -> str:
        """规范文本："c * a1^2*a3 + ..."，系数为1时省略"""
        gens = list(gens) if gens is not None else self.variables
        pieces = []
        for exps, coeff in self.terms(gens):
            mono = "*".join(
                str(g) if e == 1 else f"{g}^{e}" for g, e in zip(gens, exps) if e
            )
            if not mono:
                pieces.append(format_rational(coeff))
            elif coeff == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{format_rational(coeff)} * {mono}")
        return " + ".join(pieces) if pieces else "0"

    @classmethod
    def from_string(cls, text: str) -> "MPoly":
        names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text))
        local = {name: sp.Symbol(name) for name in names}
        expr = sp.sympify(text.replace("^", "**"), locals=local)
        return cls(expr)

    @classmethod
    def variable(cls, symbol: Union[str, sp.Symbol]) -> "MPoly":
        return cls(sp.Symbol(str(symbol)))


def monomials(variables: Sequence[sp.Symbol], degree: int) -> List[MPoly]:
    """给定次数的全部单项式，按分次字典序降序"""
    if degree < 0:
        return []
    gens = list(variables)
    result = [
        sp.Mul(*combo)
        for combo in itertools.combinations_with_replacement(gens, degree)
    ]
    result.sort(
        key=lambda m: sp.Poly(m, *gens).monoms()[0] if gens else (), reverse=True
    )
    return [MPoly(m) for m in result]
