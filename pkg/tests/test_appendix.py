"""
参考系数表的随机点复核
"""
from dataclasses import replace

import numpy as np
import pytest
import sympy as sp

from common.errors import DegenerateKinematicsError
from common.kinematics import KinematicPoint
from sunrise.appendix import (
    DISCRIMINANT,
    PRINTED_B_PRIME,
    check_point,
    compare_row,
    printed_values,
    random_points,
    sweep_summary,
    verify_appendix,
)
from sunrise.duality import check_duality

R = sp.Rational


def test_random_points_are_reproducible():
    kin = next(random_points(np.random.default_rng(3)))
    assert kin == next(random_points(np.random.default_rng(3)))
    assert all(v > 0 for v in kin.sunrise_masses())
    assert DISCRIMINANT.xreplace(kin.symbols) != 0


def test_check_point(kin_1235):
    result = check_point(kin_1235)
    assert result["rank"] == 5
    assert result["b_prime"]
    assert result["closure"]
    for row in result["rows"]:
        assert row.exact_components, row.name
        assert row.sign_component, row.name
        assert row.shifted_components, row.name
        assert row.hexagon_relations, row.name


def test_row_erratum(kin_1235):
    """第1、4分量的平移相同，第7分量取相反数，其余分量严格相等"""
    row = compare_row("nu2", kin_1235)
    assert row.match
    assert row.hexagon_relations
    assert row.fourth_shift == row.shift != 0
    erratum = row.to_dict()["erratum"]
    assert erratum["shift"] == erratum["fourth_shift"]
    assert sp.Rational(erratum["a7_computed"]) == -sp.Rational(erratum["a7_printed"])


def test_shift_values_differ_between_forms():
    """(m1², m2², m3², q1²) = (1, 1, 2, 3) 上的精确平移"""
    kin = KinematicPoint.sunrise(1, 1, 2, 3)
    rows = [compare_row(name, kin) for name in ("nu1", "nu2", "nu3")]
    assert all(row.match for row in rows)
    assert [row.shift for row in rows] == [R(17, 60), R(47, 150), R(1, 15)]
    assert [row.computed[0] for row in rows] == [R(-4, 15), R(-23, 75), R(-1, 30)]
    assert [row.computed[6] for row in rows] == [R(1, 6), R(1, 10), R(1, 12)]


@pytest.mark.parametrize(
    "component, side",
    [(0, "computed"), (3, "computed"), (3, "printed"), (1, "printed"), (6, "computed")],
)
def test_match_rejects_perturbed_rows(kin_1235, component, side):
    row = compare_row("nu1", kin_1235)
    values = list(getattr(row, side))
    values[component] += R(1, 7)
    perturbed = replace(row, **{side: tuple(values)})
    assert not perturbed.match


def test_b_prime_rejects_wrong_matrix(kin_1235):
    from integrands import sunrise_catalog
    from sunrise import residue_coordinates

    forms = sunrise_catalog(choice="mu")
    rows = [residue_coordinates(forms[f"mu{i}"], kin_1235) for i in (1, 2, 3)]
    assert check_duality(rows, PRINTED_B_PRIME)
    wrong = PRINTED_B_PRIME.copy()
    wrong[0, 0] = sp.Rational(1, 5)
    assert not check_duality(rows, wrong)


def test_printed_denominator_zero():
    # 等质量 1 时判别式为 −(1 + s)²
    kin = KinematicPoint.sunrise(1, 1, 1, -1)
    assert DISCRIMINANT.xreplace(kin.symbols) == 0
    with pytest.raises(DegenerateKinematicsError):
        printed_values("nu1", kin)


@pytest.mark.slow
def test_verify_appendix_sweep():
    frame = verify_appendix(samples=2, seed=7)
    assert len(frame) == 6
    assert set(frame["form"]) == {"nu1", "nu2", "nu3"}
    assert (frame["shift"] == frame["fourth_shift"]).all()
    assert frame["hexagon_relations"].all()
    summary = sweep_summary(frame)
    assert summary["match"]
    assert summary["rank_ok"]
    assert summary["b_prime_ok"]
    assert summary["closure_ok"]

    again = verify_appendix(samples=2, seed=7)
    assert frame["a"].tolist() == again["a"].tolist()
