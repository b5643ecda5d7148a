"""Tests for the density command."""

import math

import pytest
from kgvacuum.main import cli


def curve(rows: list[dict[str, str]]) -> list[tuple[float, float]]:
    return [(float(row["q"]), float(row["density"])) for row in rows]


class TestDensityCommand:
    def test_vacuum_is_standard_normal(self, runner, table):
        result = runner.invoke(cli, ["density", "--points", "5", "--span", "2"])
        assert result.exit_code == 0, result.output
        points = curve(table(result.stdout))
        assert [q for q, _ in points] == pytest.approx([-2.0, -1.0, 0.0, 1.0, 2.0])
        for q, rho in points:
            assert rho == pytest.approx(math.exp(-0.5 * q * q) / math.sqrt(2.0 * math.pi), rel=1e-12)

    def test_two_particle_mass(self, runner, header):
        result = runner.invoke(cli, ["density", "--state", "n:2", "--theta", "0.5", "--ff", "1"])
        assert result.exit_code == 0, result.output
        values = header(result.stdout)
        assert values["result.state"] == "n2"
        assert float(values["result.theta"]) == pytest.approx(0.5)
        assert float(values["result.total_mass"]) == pytest.approx(2.0, abs=1e-10)

    def test_coherent_without_overlap_is_vacuum(self, runner, table):
        vacuum = runner.invoke(cli, ["density", "--points", "11"])
        coherent = runner.invoke(cli, ["density", "--state", "coherent", "--fg", "0", "--points", "11"])
        assert coherent.exit_code == 0, coherent.output
        assert curve(table(coherent.stdout)) == curve(table(vacuum.stdout))

    def test_coherent_grid_is_centred_on_mean(self, runner, table):
        result = runner.invoke(cli, ["density", "--state", "coherent", "--fg", "0.5", "--points", "3", "--span", "1"])
        assert [q for q, _ in curve(table(result.stdout))] == pytest.approx([0.0, 1.0, 2.0])

    def test_overlap_beyond_cauchy_schwarz(self, runner):
        result = runner.invoke(cli, ["density", "--state", "n:1", "--fg", "2", "--ff", "1", "--gg", "1"])
        assert result.exit_code == 1
        assert "ConfigurationError" in result.stderr

    def test_fg_and_theta_are_exclusive(self, runner):
        result = runner.invoke(cli, ["density", "--state", "n:1", "--fg", "0.1", "--theta", "0.2"])
        assert result.exit_code == 1

    def test_unknown_state(self, runner):
        result = runner.invoke(cli, ["density", "--state", "n:4"])
        assert result.exit_code == 1
        assert "ConfigurationError" in result.stderr

    def test_write_to_file(self, runner, tmp_path, table):
        path = tmp_path / "vacuum.csv"
        result = runner.invoke(cli, ["density", "--points", "3", "-o", str(path)])
        assert result.exit_code == 0, result.output
        assert result.stdout == ""
        assert len(curve(table(path.read_text(encoding="utf-8")))) == 3
