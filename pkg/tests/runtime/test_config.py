"""Tests for config files and provenance headers."""

import pytest
from kgvacuum.errors import ConfigurationError
from kgvacuum.runtime.config import RunConfig
from kgvacuum.runtime.config import parse_config_lines
from kgvacuum.runtime.config import read_config_file
from kgvacuum.runtime.config import read_provenance


class TestParseConfigLines:
    def test_comments_quotes_and_dashes(self):
        values = parse_config_lines(["# physics", "", "mass = 0.5", "k-max='30'", 'xi="cutoff:L=4"'])
        assert values == {"mass": "0.5", "k_max": "30", "xi": "cutoff:L=4"}

    def test_env_expansion(self, monkeypatch):
        monkeypatch.setenv("KG_MASS", "2.5")
        monkeypatch.delenv("KG_MISSING", raising=False)
        values = parse_config_lines(["mass=${KG_MASS}", "hbar=${KG_MISSING:1.0}", "kT=${KG_MISSING}"])
        assert values == {"mass": "2.5", "hbar": "1.0", "kT": ""}

    def test_missing_equals(self):
        with pytest.raises(ConfigurationError, match="<config>:2"):
            parse_config_lines(["mass=1", "oops"])

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            read_config_file(tmp_path / "absent.conf")


class TestRunConfig:
    def test_header_round_trip(self, tmp_path):
        run = RunConfig(
            command="sample",
            params={"mass": 1.0, "testfn": ["gauss:s=1", "box:a=0.5"], "seed": 3, "output": "-", "rapidity": None},
            version="0.1.0",
        )
        lines = run.header_lines()
        assert lines[0] == "# kgvacuum 0.1.0"
        assert lines[1] == "# command=sample"
        assert "# output=-" not in lines
        assert not any(line.startswith("# rapidity") for line in lines)

        path = tmp_path / "run.csv"
        path.write_text("\n".join([*lines, "observable,estimate"]) + "\n", encoding="utf-8")
        restored = read_provenance(path)
        assert restored.command == "sample"
        assert restored.version == "0.1.0"
        assert restored.params == {"mass": "1.0", "seed": "3", "testfn": ["gauss:s=1", "box:a=0.5"]}

    def test_missing_command(self):
        with pytest.raises(ConfigurationError):
            RunConfig.from_header(["# kgvacuum 0.1.0", "q,density"])
