"""
积分形式、细分拉回与sunrise形式目录测试
"""
import pytest
import sympy as sp

from algebra.polynomial import MPoly, alphas
from common.errors import DimensionParityError
from graphs.standard import path_graph, sunrise, triangle
from graphs.subdivision import SubdivisionSpec
from integrands import (
    ProjForm,
    SubdivisionExponents,
    feynman_integrand,
    subdivision_pullback,
    sunrise_catalog,
    verify_pullback_identity,
)

a1, a2, a3 = alphas(3)


class TestFeynmanIntegrand:
    @pytest.mark.parametrize("d, expected", [(2, (0, 1)), (4, (3, -1))])
    def test_sunrise_exponents(self, d, expected):
        form = feynman_integrand(sunrise(), d)
        assert (form.psi_exp, form.xi_exp) == expected
        assert form.is_homogeneous()

    def test_odd_dimension(self):
        with pytest.raises(DimensionParityError):
            feynman_integrand(sunrise(), 3)

    def test_single_edge_rejected(self):
        with pytest.raises(ValueError):
            feynman_integrand(path_graph(1), 2)

    def test_inhomogeneous_form(self):
        with pytest.raises(ValueError):
            ProjForm(sunrise(), MPoly(1), 0, 2)

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            ProjForm(sunrise(), MPoly(1), 0, 1, sign=2)

    def test_chart_scalar_needs_full_kind(self):
        form = sunrise_catalog()["omega0"]
        with pytest.raises(ValueError):
            form.chart_scalar(1)


class TestSubdivisionPullback:
    def test_exponents(self):
        exps = SubdivisionExponents.compute(2, 2, 3)
        assert (exps.z1, exps.z2, exps.K) == (0, -1, 3)

    def test_parity(self):
        """h = 1 时 d' − d 为奇数没有意义"""
        with pytest.raises(DimensionParityError):
            SubdivisionExponents.compute(1, 1, 1)

    def test_eta(self):
        eta = subdivision_pullback(sunrise(), SubdivisionSpec((1, 0, 0)), 2, 2)
        assert (eta.sign, eta.psi_exp, eta.xi_exp) == (-1, -1, 2)
        assert eta.folded_numerator() == MPoly(-a1) * eta.psi

    def test_nu1(self):
        nu = subdivision_pullback(sunrise(), SubdivisionSpec((1, 2, 0)), 4, 2)
        assert nu.numerator == MPoly(a1 * a2**2)
        assert (nu.sign, nu.psi_exp, nu.xi_exp) == (-1, 0, 2)

    @pytest.mark.parametrize("d_sub", [2, 4])
    def test_fibre_identity_sunrise(self, d_sub):
        assert verify_pullback_identity(sunrise(), d_sub, 2)

    def test_fibre_identity_triangle(self):
        graph = triangle(massive=True)
        assert verify_pullback_identity(graph, 4, 4)

    def test_folded_requires_nonpositive_psi(self):
        form = feynman_integrand(sunrise(), 4)
        with pytest.raises(ValueError):
            form.folded_numerator()


class TestCatalog:
    def test_names(self):
        assert list(sunrise_catalog()) == [
            "omega", "eta", "nu1", "nu2", "nu3", "omega0", "mu1", "mu2", "mu3",
        ]
        assert list(sunrise_catalog(choice="mu")) == ["omega", "eta", "mu1", "mu2", "mu3"]
        assert list(sunrise_catalog(choice="nu")) == ["omega", "eta", "nu1", "nu2", "nu3"]

    def test_invalid_choice(self):
        with pytest.raises(ValueError):
            sunrise_catalog(choice="lambda")

    def test_omega0_is_pair_form(self):
        form = sunrise_catalog()["omega0"]
        assert form.omega_kind == ("pair", 1, 2)
        assert form.weight == 2
        assert form.numerator == MPoly(sp.Symbol("m3sq") ** 2 * a3**4)

    def test_mu_forms_homogeneous(self):
        catalog = sunrise_catalog()
        for name in ("mu1", "mu2", "mu3"):
            form = catalog[name]
            assert (form.psi_exp, form.xi_exp) == (0, 2)
            assert form.numerator.degree(form.graph.alphas()) == 3

    def test_dict_round_trip(self):
        form = sunrise_catalog()["nu2"]
        again = ProjForm.from_dict(form.to_dict())
        assert again == form
        assert again.xi == form.xi
