import json
import math

import pytest
from click.testing import CliRunner

from sunphases.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def payload(result):
    data = json.loads(result.output)
    data.pop("timestamp", None)
    return data


class TestBasis:
    def test_fundamental_su3(self, runner):
        result = runner.invoke(main, ["basis", "--n", "3", "--lambda", "1"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["results"]["dimension"] == 3
        states = data["results"]["states"]
        assert states[0] == {"index": 0, "occupations": [1, 0, 0], "weight": [1, 0]}
        assert states[1]["weight"] == [-1, 1]
        assert states[2]["weight"] == [0, -1]

    def test_csv_output(self, runner):
        result = runner.invoke(
            main, ["basis", "--n", "3", "--lambda", "1", "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].split(",")[0] == "index"
        assert len(lines) == 4

    def test_bad_mode_count_is_usage_error(self, runner):
        result = runner.invoke(main, ["basis", "--n", "1", "--lambda", "2"])
        assert result.exit_code == 2

    def test_out_file(self, runner, tmp_path):
        target = tmp_path / "basis.json"
        result = runner.invoke(
            main, ["basis", "--n", "3", "--lambda", "2", "--out", str(target)]
        )
        assert result.exit_code == 0
        data = json.loads(target.read_text())
        assert data["results"]["dimension"] == 6


class TestGens:
    def test_residual_reported(self, runner):
        result = runner.invoke(main, ["gens", "--n", "3", "--lambda", "2"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["residuals"]["commutation"] < 1e-12
        assert "C_12" in data["results"]
        # real matrices serialized as [re, im] pairs
        entry = data["results"]["C_12"][0][1]
        assert entry == [pytest.approx(math.sqrt(2)), 0.0]


class TestPhases:
    def test_paper_sign_fundamental(self, runner):
        result = runner.invoke(
            main,
            ["phases", "--n", "3", "--lambda", "1", "--root", "1,2",
             "--convention", "paper-sign"],
        )
        assert result.exit_code == 0
        data = payload(result)
        e = data["results"]["E"]
        assert e[0][1] == [1.0, 0.0]
        assert e[1][0] == [-1.0, 0.0]
        assert e[2][2] == [1.0, 0.0]
        assert data["residuals"]["unitarity"] < 1e-12

    def test_trivial_irrep(self, runner):
        result = runner.invoke(main, ["phases", "--n", "3", "--lambda", "0"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["results"]["E"] == [[[1.0, 0.0]]]
        assert data["results"]["D"] == [[[0.0, 0.0]]]

    def test_complementary_omega_matrix(self, runner):
        beta = 2 * math.pi / 3
        result = runner.invoke(
            main,
            ["phases", "--n", "3", "--lambda", "1", "--root", "1,2",
             "--convention", "complementary", "--beta", str(beta)],
        )
        assert result.exit_code == 0
        e = payload(result)["results"]["E"]
        assert e[0][1] == [1.0, 0.0]
        re, im = e[1][2]
        assert re == pytest.approx(math.cos(beta))
        assert im == pytest.approx(math.sin(beta))

    def test_complementary_needs_fundamental(self, runner):
        result = runner.invoke(
            main,
            ["phases", "--n", "3", "--lambda", "2", "--convention", "complementary"],
        )
        assert result.exit_code == 2

    def test_bad_root_string(self, runner):
        result = runner.invoke(
            main, ["phases", "--n", "3", "--lambda", "1", "--root", "banana"]
        )
        assert result.exit_code == 2


class TestSweep:
    def test_su3_formula_column(self, runner):
        result = runner.invoke(
            main, ["sweep", "--n", "3", "--from", "1", "--to", "6"]
        )
        assert result.exit_code == 0
        rows = payload(result)["results"]["rows"]
        assert [r["lambda"] for r in rows] == list(range(1, 7))
        for row in rows:
            assert abs(row["difference"]) < 1e-9
        assert rows[0]["normalized_norm"] == pytest.approx(2.0)

    def test_su4_formula_side_by_side(self, runner):
        result = runner.invoke(
            main, ["sweep", "--n", "4", "--from", "1", "--to", "3"]
        )
        assert result.exit_code == 0
        rows = payload(result)["results"]["rows"]
        assert rows[0]["formula_value"] == pytest.approx(2.25)
        assert rows[0]["normalized_norm"] == pytest.approx(1.5)
        # difference is reported, never forced to zero
        assert abs(rows[0]["difference"]) > 0.5

    def test_csv_format(self, runner):
        result = runner.invoke(
            main, ["sweep", "--n", "3", "--from", "1", "--to", "3",
                   "--format", "csv"]
        )
        assert result.exit_code == 0
        header = result.output.splitlines()[0]
        assert "normalized_norm" in header and "fixed_points" in header

    def test_empty_range_is_usage_error(self, runner):
        result = runner.invoke(
            main, ["sweep", "--n", "3", "--from", "5", "--to", "4"]
        )
        assert result.exit_code == 2

    def test_single_root_is_usage_error(self, runner):
        result = runner.invoke(
            main, ["sweep", "--n", "3", "--from", "1", "--to", "3",
                   "--root", "1,2"]
        )
        assert result.exit_code == 2

    def test_thread_count_does_not_change_payload(self, runner):
        args = ["sweep", "--n", "3", "--from", "1", "--to", "6"]
        serial = payload(runner.invoke(main, args + ["--threads", "1"]))
        parallel = payload(runner.invoke(main, args + ["--threads", "4"]))
        assert serial == parallel


class TestPauli:
    def test_solutions_listed(self, runner):
        result = runner.invoke(main, ["pauli"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["residuals"]["exchange_relations"] < 1e-12
        sols = data["results"]["additive_solutions"]
        assert len(sols) == 3
        assert sum(s["simplest_nontrivial"] for s in sols) == 1


class TestGamma:
    def test_su2_diagnostics(self, runner):
        result = runner.invoke(main, ["gamma", "--j", "1.5"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["results"]["witness"] == pytest.approx(2.0)
        assert data["residuals"]["phase_part_vs_shift"] == 0.0

    def test_su3_diagnostics(self, runner):
        result = runner.invoke(main, ["gamma", "--lambda", "3"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["results"]["dimension"] == 10
        assert data["residuals"]["commutation"] < 1e-12

    def test_requires_exactly_one_selector(self, runner):
        assert runner.invoke(main, ["gamma"]).exit_code == 2
        assert (
            runner.invoke(main, ["gamma", "--j", "1", "--lambda", "1"]).exit_code == 2
        )


class TestVerify:
    def test_pauli_suite_passes(self, runner):
        result = runner.invoke(main, ["verify", "--suite", "pauli"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines and all(line.startswith("PASS") for line in lines)

    def test_all_suites_pass(self, runner):
        result = runner.invoke(main, ["verify", "--suite", "all"])
        assert result.exit_code == 0
        assert "FAIL" not in result.output

    def test_unknown_suite(self, runner):
        assert runner.invoke(main, ["verify", "--suite", "nope"]).exit_code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ["basis", "--n", "3", "--lambda", "4"],
            ["phases", "--n", "3", "--lambda", "3", "--root", "3,1"],
            ["sweep", "--n", "3", "--from", "1", "--to", "5"],
            ["pauli"],
            ["gamma", "--j", "2"],
        ],
    )
    def test_repeat_runs_identical(self, runner, args):
        first = payload(runner.invoke(main, args))
        second = payload(runner.invoke(main, args))
        assert first == second
