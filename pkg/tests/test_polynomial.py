"""
多项式与分次求解测试
"""
import pytest
import sympy as sp

from algebra.graded_solve import graded_solve
from algebra.polynomial import MPoly, alpha, alphas, monomials
from common.errors import InputError
from common.kinematics import KinematicPoint, format_rational, param_label, param_symbol, parse_rational

a1, a2, a3 = alphas(3)


class TestMPoly:
    def test_arithmetic_is_canonical(self):
        """(a1+a2)(a1−a2) 展开后与 a1² − a2² 相等"""
        left = MPoly(a1 + a2) * MPoly(a1 - a2)
        assert left == MPoly(a1**2 - a2**2)
        assert 2 * MPoly(a1) == MPoly(2 * a1)
        assert 1 - MPoly(a1) == MPoly(1 - a1)

    def test_to_string_format(self):
        psi = MPoly(a1 * a2 + a1 * a3 + a2 * a3)
        assert psi.to_string() == "a1*a2 + a1*a3 + a2*a3"
        assert MPoly(sp.Rational(3, 2) * a1**2).to_string() == "3/2 * a1^2"
        assert MPoly(0).to_string() == "0"

    def test_from_string(self):
        poly = MPoly.from_string("3/2 * a1^2 + m1sq*a2")
        assert poly == MPoly(sp.Rational(3, 2) * a1**2 + sp.Symbol("m1sq") * a2)
        assert poly.parameters == [sp.Symbol("m1sq")]

    def test_degree_and_homogeneity(self):
        xi = MPoly(sp.Symbol("q1sq") * a1 * a2 * a3 + (a1 + a2) * (a1 * a2))
        assert xi.degree() == 3
        assert xi.is_homogeneous()
        assert not MPoly(a1**2 + a2).is_homogeneous()
        assert MPoly(0).degree() == -1

    def test_rejects_non_polynomial(self):
        with pytest.raises(ValueError):
            MPoly(1 / a1)

    def test_immutable(self):
        poly = MPoly(a1)
        with pytest.raises(AttributeError):
            poly.foo = 1

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            MPoly(a1) ** -1

    def test_substitute_is_simultaneous(self):
        poly = MPoly(a1 + 2 * a2)
        swapped = poly.substitute({a1: a2, a2: a1})
        assert swapped == MPoly(a2 + 2 * a1)

    def test_evaluate(self):
        poly = MPoly(a1 * a2 + a3)
        assert poly.evaluate({a1: 2, a2: sp.Rational(1, 3), a3: 1}) == sp.Rational(5, 3)
        with pytest.raises(ValueError):
            poly.evaluate({a1: 1})

    def test_specialize(self, kin_1235):
        poly = MPoly(sp.Symbol("m1sq") * a1 + sp.Symbol("q1sq") * a2)
        assert poly.specialize(kin_1235) == MPoly(a1 + 5 * a2)
        with pytest.raises(ValueError):
            MPoly(sp.Symbol("s12sq") * a1).specialize(kin_1235)

    def test_monomials_count(self):
        """三变量三次单项式共10个"""
        assert len(monomials([a1, a2, a3], 3)) == 10
        assert monomials([a1, a2], -1) == []


class TestGradedSolve:
    def test_solves_membership(self):
        generators = [MPoly(a1), MPoly(a2)]
        target = MPoly(a1**2 + 3 * a1 * a2 - a2**2)
        result = graded_solve(target, generators, [], 2)
        assert not result.residual
        assert result.verify(target, generators, [])

    def test_complement_coefficient(self):
        """a1·a2 不在 (a1², a2²) 中，只能由补空间给出"""
        generators = [MPoly(a1**2), MPoly(a2**2)]
        complement = [MPoly(a1 * a2)]
        target = MPoly(2 * a1**2 + 5 * a1 * a2)
        result = graded_solve(target, generators, complement, 2)
        assert result.complement_coefficients == [5]
        assert result.verify(target, generators, complement)

    def test_inconsistent_system_is_residual(self):
        result = graded_solve(MPoly(a1 * a2), [MPoly(a1**2)], [], 2)
        assert result.residual
        assert not result.verify(MPoly(a1 * a2), [MPoly(a1**2)], [])

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            graded_solve(MPoly(a1**3), [MPoly(a1)], [], 2)

    def test_unspecialized_parameters(self):
        with pytest.raises(ValueError):
            graded_solve(MPoly(sp.Symbol("m1sq") * a1), [MPoly(a1)], [], 1)


class TestKinematics:
    def test_labels(self):
        assert param_symbol("m1^2") == sp.Symbol("m1sq")
        assert param_symbol(0) is None
        assert param_label(sp.Symbol("q1sq")) == "q1^2"
        with pytest.raises(InputError):
            param_symbol("m^^2")

    def test_rationals(self):
        assert parse_rational("3/7") == sp.Rational(3, 7)
        assert format_rational(sp.Rational(-4, 6)) == "-2/3"
        with pytest.raises(InputError):
            parse_rational(0.5)

    def test_from_file(self, data_dir):
        kin = KinematicPoint.from_file(data_dir / "kin_1235.json")
        assert kin.sunrise_masses() == (1, 2, 3, 5)
        assert kin.to_dict() == {"m1^2": "1", "m2^2": "2", "m3^2": "3", "q1^2": "5"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            KinematicPoint.from_file(tmp_path / "missing.json")

    def test_alpha_symbol(self):
        assert alpha(2) == a2
