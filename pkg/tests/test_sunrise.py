"""
sunrise三次曲线：图卡、边界点、Griffiths降阶、残差坐标与余作用表
"""
import pytest
import sympy as sp

from common.errors import DegenerateKinematicsError
from common.kinematics import KinematicPoint
from integrands import sunrise_catalog
from sunrise import (
    HEXAGON,
    HEXAGON_CHARTS,
    BlowupChart,
    basis_rank,
    boundary_points,
    chart_for_pair,
    check_duality,
    coaction_table,
    compose_check,
    dual_coefficients,
    griffiths_reduce,
    is_equal_mass,
    is_smooth,
    residue_coordinates,
    specialized_xi,
    strict_transform,
    weight0_check,
)
from sunrise.coaction import DE_RHAM_BASIS, NU_LABELS
from sunrise.residues import COMPONENT_LABELS

R = sp.Rational


@pytest.fixture(scope="module")
def catalog():
    return sunrise_catalog(choice="all")


class TestCharts:
    def test_hexagon_charts_invert(self):
        for chart in HEXAGON_CHARTS:
            assert compose_check(chart.blowup)

    def test_deep_flag(self):
        chart = BlowupChart(3, ({1}, {1, 2}, {1, 2, 3}), (1, 2, 3))
        assert compose_check(chart)
        assert len(chart.exceptional_coordinates()) == 2

    @pytest.mark.parametrize(
        "flag, choice",
        [
            (({1, 2}, {1, 2}), (1, 2)),  # 不严格递增
            (({1, 2}, {1, 2, 3}), (3, 1)),  # 选择不在差集中
            (({1},), (1,)),  # 最后一项不是全集
        ],
    )
    def test_invalid_flags(self, flag, choice):
        with pytest.raises(ValueError):
            BlowupChart(3, flag, choice)

    def test_pairs_cover_hexagon(self):
        seen = [chart_for_pair(k)[0] for k in range(1, 7)]
        assert tuple(seen) == HEXAGON
        assert chart_for_pair(6)[:2] == ("P1", "P2")
        with pytest.raises(ValueError):
            chart_for_pair(7)


class TestBoundary:
    def test_points(self, kin_1235):
        xi = specialized_xi(kin_1235)
        points = boundary_points(kin_1235, xi)
        assert list(points) == ["P1", "P2", "P3", "P4", "P5", "P6"]
        assert points["P2"].image == (R(-2, 1), 1, 0)
        assert points["P4"].image == (0, R(-3, 2), 1)
        assert points["P6"].image == (1, 0, R(-1, 3))
        assert [points[p].index for p in ("P2", "P4", "P6")] == [3, 1, 2]
        assert points["P3"].kind == "exceptional"

    def test_points_lie_on_strict_transforms(self, kin_1235):
        xi = specialized_xi(kin_1235)
        points = boundary_points(kin_1235)
        for k in range(1, 7):
            first, second, chart = chart_for_pair(k)
            F = strict_transform(xi, chart)
            for label in (first, second):
                s0, t0 = points[label].chart_coordinates(chart)
                assert F.xreplace({chart.s: s0, chart.t: t0}) == 0

    def test_zero_mass(self):
        with pytest.raises(DegenerateKinematicsError):
            boundary_points(KinematicPoint.sunrise(0, 2, 3, 5))

    def test_wrong_chart(self, kin_1235):
        points = boundary_points(kin_1235)
        with pytest.raises(DegenerateKinematicsError, match="chart failure"):
            points["P1"].chart_coordinates(HEXAGON_CHARTS[0])


class TestGriffiths:
    def test_smoothness(self, kin_1235):
        assert is_smooth(specialized_xi(kin_1235))
        # q² = 0 时 Ξ = (Σ m_i α_i)·Ψ 可约
        assert not is_smooth(specialized_xi(KinematicPoint.sunrise(1, 2, 3, 0)))

    def test_reduction_identity(self, catalog, kin_1235):
        xi = specialized_xi(kin_1235)
        for name in ("nu1", "nu2", "nu3", "mu1", "eta"):
            reduction = griffiths_reduce(catalog[name], kin_1235)
            assert reduction.verify(xi), name

    def test_eta_reduces_to_itself(self, catalog, kin_1235):
        reduction = griffiths_reduce(catalog["eta"], kin_1235)
        assert reduction.c_eta == 1
        assert reduction.c_omega == 0
        assert all(p.is_zero() for p in reduction.potential)

    def test_singular_curve(self, catalog):
        with pytest.raises(DegenerateKinematicsError, match="not smooth"):
            griffiths_reduce(catalog["nu1"], KinematicPoint.sunrise(1, 2, 3, 0))

    def test_pair_form_rejected(self, catalog, kin_1235):
        with pytest.raises(ValueError):
            griffiths_reduce(catalog["omega0"], kin_1235)


class TestResidues:
    def test_basis_forms(self, catalog, kin_1235):
        omega = residue_coordinates(catalog["omega"], kin_1235)
        eta = residue_coordinates(catalog["eta"], kin_1235)
        assert omega.a == (0, 0, 0, 0, 0, 0, 1)
        assert eta.a == (0, 0, 0, 0, 0, 1, 0)

    def test_decomposition_certificates(self, catalog, kin_1235):
        for name in ("nu1", "nu2", "nu3"):
            decomposition = residue_coordinates(catalog[name], kin_1235)
            assert decomposition.closure_ok
            assert decomposition.verify()

    def test_labels_follow_hexagon(self, kin_1235):
        """第k个分量属于 P_{k+1}，且相邻编号的点落在同一图卡"""
        points = boundary_points(kin_1235)
        assert COMPONENT_LABELS[:5] == ("df2", "df3", "df4", "df5", "df6")
        assert list(HEXAGON) == list(points)[1:] + ["P1"]
        for k in range(1, 7):
            first, second, chart = chart_for_pair(k)
            points[first].chart_coordinates(chart)
            points[second].chart_coordinates(chart)

    def test_components_are_potential_differences(self, catalog, kin_1235):
        """a_k = G(P_{k+1}) − G(P1)"""
        decomposition = residue_coordinates(catalog["nu2"], kin_1235)
        potential = {}
        for values in decomposition.point_values.values():
            potential.update(values)
        expected = tuple(potential[f"P{k}"] - potential["P1"] for k in range(2, 7))
        assert decomposition.a[:5] == expected
        assert decomposition.to_dict()["labels"] == list(COMPONENT_LABELS)

    def test_rank(self, catalog, kin_1235):
        rows = [residue_coordinates(catalog[n], kin_1235) for n in ("nu1", "nu2", "nu3", "eta", "omega")]
        assert basis_rank(rows) == 5

    @pytest.mark.parametrize("kin", [(1, 2, 3, 5), (2, 3, 7, 11), (5, 1, 4, 9)])
    def test_mu_vectors_are_constant(self, catalog, kin):
        """μ 的前五个坐标与运动学无关"""
        kin = KinematicPoint.sunrise(*kin)
        vectors = [residue_coordinates(catalog[f"mu{i}"], kin).a[:5] for i in (1, 2, 3)]
        assert vectors == [(2, 1, 1, 1, 2), (1, -1, 1, 0, 0), (0, 0, 1, -1, 1)]


class TestDuality:
    def test_pseudo_inverse(self, catalog, kin_1235):
        rows = [residue_coordinates(catalog[n], kin_1235) for n in ("nu1", "nu2", "nu3")]
        duality = dual_coefficients(rows)
        assert duality.certificate
        assert duality.nullspace_dim == 2
        assert check_duality(rows, duality.b)
        assert duality.column(0)[5:] == [0, 0]

    def test_rank_deficient(self):
        with pytest.raises(DegenerateKinematicsError):
            dual_coefficients([(1, 0, 0, 0, 0), (2, 0, 0, 0, 0)])

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            check_duality([(1, 0, 0, 0, 0)], sp.eye(3))


class TestCoaction:
    @pytest.mark.parametrize("basis", ["mu", "nu"])
    def test_generic_table(self, kin_1235, basis):
        table = coaction_table(kin_1235, basis)
        assert len(table.rows) == 6
        assert not table.reduced
        assert table.duality.certificate
        assert table.rows[0].vector == (1, 0, 0, 0, 0, 0, 0, 0)
        assert table.rows[2].vector[7] == 1
        for row in table.rows[3:]:
            assert row.vector[:2] == (0, 0) and row.vector[7] == 0

    def test_mu_labels(self, kin_1235):
        table = coaction_table(kin_1235, "mu")
        assert table.labels[3:] == ["log(m3^2/m2^2)", "log(m1^2/m3^2)", "log(m2^2/m1^2)"]

    def test_equal_mass(self, kin_equal):
        assert is_equal_mass(kin_equal)
        table = coaction_table(kin_equal, "mu")
        assert table.reduced
        assert len(table.rows) == 3
        assert table.dropped == ("log(1)",) * 3
        assert table.to_dict()["dropped"] == ["log(1)"] * 3

    def test_equal_mass_nu_basis(self, kin_equal):
        table = coaction_table(kin_equal, "nu")
        assert table.reduced
        assert table.labels == ["I_G", "I_{G_s(e1)}", "I_{G\\e3}"]
        assert table.dropped == tuple(NU_LABELS.values())

    def test_invalid_basis(self, kin_1235):
        with pytest.raises(ValueError):
            coaction_table(kin_1235, "lambda")

    def test_document(self, kin_1235):
        document = coaction_table(kin_1235, "nu").to_dict()
        assert document["basis"] == "nu"
        assert len(document["de_rham_basis"]) == 8
        assert document["de_rham_basis"][2:7] == [f"F[P1,P{k}]L" for k in range(2, 7)]
        assert all(len(row["de_rham"]) == 8 for row in document["rows"])


class TestWeight0:
    def test_symbolic(self):
        result = weight0_check()
        assert result.holds
        assert sp.simplify(result.witness - 1 / (1 + sp.Symbol("v")) ** 2) == 0

    def test_at_point(self, kin_1235):
        assert weight0_check(kin_1235).holds
