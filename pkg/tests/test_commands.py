"""
命令层：分派、退出码与JSON文档
"""
import json

import pytest
import sympy

import main
from commands import EXIT_INPUT, EXIT_OK, CommandRequest
from commands.command_factory import command_factory, execute_command


def run(command, inputs=None, **kwargs):
    options = kwargs.pop("options", {})
    request = CommandRequest(command=command, inputs=inputs or [], options=options, **kwargs)
    return execute_command(request)


def test_registered_commands():
    names = command_factory.get_command_names()
    for name in ("symanzik", "subdivide", "integrand", "coaction", "verify-appendix",
                 "periods", "sv-matrix", "quadrature", "eichler", "selftest"):
        assert name in names
    assert "🔧 symanzik" in command_factory.get_command_descriptions()


class TestGraphCommands:
    def test_symanzik_from_file(self, data_dir):
        result = run("symanzik", [str(data_dir / "sunrise.json")])
        assert result.exit_code == EXIT_OK
        assert result.document["psi"] == "a1*a2 + a1*a3 + a2*a3"
        assert result.document["spanning_trees"] == 3
        assert result.document["kirchhoff_ok"]

    def test_symanzik_missing_file(self):
        result = run("symanzik", ["missing.json"])
        assert result.exit_code == EXIT_INPUT
        assert result.document["error"]["type"] == "InputError"

    def test_symanzik_requires_graph(self):
        assert run("symanzik").exit_code == EXIT_INPUT

    def test_subdivide(self):
        result = run("subdivide", ["sunrise"], options={"counts": "e1:1,e2:2"})
        assert result.exit_code == EXIT_OK
        assert result.document["counts"] == [1, 2, 0]
        assert result.document["substitution_ok"]

    def test_subdivide_bad_counts(self):
        result = run("subdivide", ["sunrise"], options={"counts": "e1:-1"})
        assert result.exit_code == EXIT_INPUT

    def test_integrand_with_pullback(self):
        result = run("integrand", ["sunrise"], options={"dim": 2, "counts": "e1:1"})
        assert result.exit_code == EXIT_OK
        assert result.document["identity_ok"]

    def test_integrand_odd_dimension(self):
        result = run("integrand", ["sunrise"], options={"dim": 3})
        assert result.exit_code == EXIT_INPUT
        assert result.document["error"]["type"] == "DimensionParityError"

    def test_integrand_catalog(self):
        result = run("integrand", ["catalog"])
        assert {"omega", "eta", "mu1", "nu3"} <= set(result.document["catalog"])


class TestSunriseCommands:
    def test_coaction(self, data_dir):
        result = run("coaction", kin=str(data_dir / "kin_1235.json"), basis="mu")
        assert result.exit_code == EXIT_OK
        assert len(result.document["rows"]) == 6
        assert len(result.document["de_rham_basis"]) == 8

    def test_coaction_equal_mass(self, data_dir):
        result = run("coaction", kin=str(data_dir / "kin_equal.json"), basis="mu")
        assert result.exit_code == EXIT_OK
        assert len(result.document["rows"]) == 3
        assert result.document["reduced"]

    def test_coaction_bad_basis(self, data_dir):
        result = run("coaction", kin=str(data_dir / "kin_1235.json"), basis="lambda")
        assert result.exit_code == EXIT_INPUT

    def test_coaction_requires_kin(self):
        assert run("coaction").exit_code == EXIT_INPUT

    def test_output_is_deterministic(self, data_dir):
        first = run("coaction", kin=str(data_dir / "kin_1235.json"), basis="nu")
        second = run("coaction", kin=str(data_dir / "kin_1235.json"), basis="nu")
        assert first.to_json() == second.to_json()
        assert json.loads(first.to_json()) == first.document

    @pytest.mark.slow
    def test_verify_appendix(self):
        result = run("verify-appendix", samples=2, seed=7)
        assert result.exit_code == EXIT_OK
        assert result.document["all_match"]
        assert result.document["samples"] == 2
        erratum = result.document["erratum"]
        assert len(erratum) == 6
        assert all(r["shift"] == r["fourth_shift"] for r in erratum)
        assert all(sympy.Rational(r["a7_computed"]) == -sympy.Rational(r["a7_printed"]) for r in erratum)

    def test_verify_appendix_bad_samples(self):
        assert run("verify-appendix", samples=0).exit_code == EXIT_INPUT

    def test_periods(self, data_dir):
        result = run("periods", kin=str(data_dir / "kin_1235.json"))
        assert result.exit_code == EXIT_OK
        document = result.document
        assert document["legendre_ok"] and document["fricke_ok"]
        assert document["boundary_images"]["P1"] == "infinity"
        assert abs(float(sympy.Rational(document["weierstrass"]["j"])) - 56645.9456) < 1e-3

    def test_periods_bad_base(self, data_dir):
        result = run("periods", kin=str(data_dir / "kin_1235.json"), options={"base": "P7"})
        assert result.exit_code == EXIT_INPUT


class TestPeriodCommands:
    def test_sv_matrix(self):
        result = run("sv-matrix", options={"tau": "0.1+1.2i", "lam": "0.8-0.3i", "z1": "0.2+0.1i", "z2": "-0.3+0.2i"})
        assert result.exit_code == EXIT_OK
        assert result.document["cross_check_ok"]
        assert {"f31", "f32"} <= set(result.document)

    def test_sv_matrix_lower_half_plane(self):
        assert run("sv-matrix", options={"tau": "0.1-1.2i"}).exit_code == EXIT_INPUT

    def test_eichler(self):
        result = run("eichler", options={"qexp": "delta:30", "tau": "0.1+1.5i", "power": 3})
        assert result.exit_code == EXIT_OK
        assert result.document["weight"] == 12
        assert result.document["order"] == 30

    def test_eichler_power_out_of_range(self):
        result = run("eichler", options={"qexp": "delta:30", "tau": "0.1+1.5i", "power": 11})
        assert result.exit_code == EXIT_INPUT

    def test_eichler_unknown_expansion(self):
        result = run("eichler", options={"qexp": "theta:10", "tau": "0.1+1.5i"})
        assert result.exit_code == EXIT_INPUT


class TestSelftest:
    def test_selected_checks(self):
        result = run("selftest", options={"only": "symanzik,weight0"})
        assert result.exit_code == EXIT_OK
        assert list(result.document["checks"]) == ["symanzik", "weight0"]
        assert result.document["all_passed"]

    def test_unknown_check(self):
        assert run("selftest", options={"only": "symanzik,nonsense"}).exit_code == EXIT_INPUT


def test_unknown_command():
    result = run("factorize")
    assert result.exit_code == EXIT_INPUT
    assert "factorize" in result.document["error"]["message"]


class TestMain:
    def test_good_invocation(self, capsys, data_dir):
        code = main.main(["symanzik", str(data_dir / "sunrise.json")])
        assert code == 0
        document = json.loads(capsys.readouterr().out)
        assert document["loop_number"] == 2

    def test_unknown_flag(self, capsys):
        code = main.main(["symanzik", "sunrise", "--frobnicate"])
        assert code == 2
        document = json.loads(capsys.readouterr().out)
        assert document["error"]["type"] == "ArgumentError"

    def test_out_file(self, tmp_path, data_dir):
        out = tmp_path / "table.json"
        code = main.main(["coaction", "--kin", str(data_dir / "kin_1235.json"), "--out", str(out)])
        assert code == 0
        assert len(json.loads(out.read_text(encoding="utf-8"))["rows"]) == 6

    def test_missing_command(self):
        assert main.main([]) == 2
