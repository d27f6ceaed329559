"""
公共类型与异常
"""
from .errors import (
    FeynkitError,
    GraphError,
    DimensionParityError,
    DegenerateKinematicsError,
    ConvergenceError,
    InputError,
    VerificationFailure,
)
from .kinematics import (
    KinematicPoint,
    param_symbol,
    param_label,
    parse_rational,
    format_rational,
)

__all__ = [
    "FeynkitError",
    "GraphError",
    "DimensionParityError",
    "DegenerateKinematicsError",
    "ConvergenceError",
    "InputError",
    "VerificationFailure",
    "KinematicPoint",
    "param_symbol",
    "param_label",
    "parse_rational",
    "format_rational",
]
