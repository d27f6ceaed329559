"""
精确代数：多项式与分次线性求解
"""
from .polynomial import MPoly, alpha, alphas, is_alpha, monomials, sort_variables
from .graded_solve import GradedSolveResult, graded_solve

__all__ = [
    "MPoly",
    "alpha",
    "alphas",
    "is_alpha",
    "monomials",
    "sort_variables",
    "GradedSolveResult",
    "graded_solve",
]
