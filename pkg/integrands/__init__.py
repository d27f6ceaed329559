"""
射影Feynman积分核与细分拉回
"""
from .projform import (
    FULL,
    ProjForm,
    SubdivisionExponents,
    feynman_integrand,
    integrand_exponents,
    subdivision_pullback,
    verify_pullback_identity,
)
from .catalog import NU_SUBDIVISIONS, sunrise_catalog

__all__ = [
    "FULL",
    "ProjForm",
    "SubdivisionExponents",
    "feynman_integrand",
    "integrand_exponents",
    "subdivision_pullback",
    "verify_pullback_identity",
    "NU_SUBDIVISIONS",
    "sunrise_catalog",
]
