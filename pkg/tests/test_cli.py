import json
from pathlib import Path

import pytest

from curvelab.cli import main
from curvelab.specfile import load_curve
from curvelab.errors import SpecFileError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


class TestSpecFiles:
    def test_load_gallery(self):
        curve = load_curve(FIXTURES / "exp.json")
        assert curve.n == 1
        assert curve.K == 0.5
        curve = load_curve(FIXTURES / "product2.json")
        assert curve.n == 2

    def test_vanishing_component_diagnostic(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "n": 1, "sigma": 0.0,
            "components": [
                {"type": "poly", "Q": [[0, 0], [1, 0]]},
                {"type": "poly", "Q": [[1, 0]]},
            ]}))
        with pytest.raises(SpecFileError, match="component 1 must be nonvanishing"):
            load_curve(bad)

    def test_parse_error_has_line(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{\n  broken\n}")
        with pytest.raises(SpecFileError, match=r":2:"):
            load_curve(bad)


class TestCommands:
    def test_characteristic_csv(self, tmp_path, capsys):
        status = main(["characteristic", "--input", str(FIXTURES / "line.json"),
                       "--out", str(tmp_path), "--rmin", "1", "--rmax", "4",
                       "--grid", "8"])
        assert status == 0
        lines = (tmp_path / "characteristic.csv").read_text().splitlines()
        assert lines[0] == "r,T_area,T_jensen,n_t"
        assert len(lines) == 9

    def test_verify_bound_exit_zero(self, tmp_path, capsys):
        status = main(["verify-bound", "--input", str(FIXTURES / "exp.json"),
                       "--out", str(tmp_path), "--rmin", "1", "--rmax", "15",
                       "--grid", "10"])
        assert status == 0
        report = json.loads((tmp_path / "bound_report.json").read_text())
        assert all(report["verdicts"].values())

    def test_locus_outputs(self, tmp_path, capsys):
        status = main(["locus", "--input", str(FIXTURES / "product2.json"),
                       "--out", str(tmp_path), "--rmax", "30"])
        assert status == 0
        summary = json.loads((tmp_path / "locus.json").read_text())
        assert summary["r0"] == pytest.approx(2.0)
        assert len(summary["branches"]) == 2
        branch_csv = (tmp_path / "branch_000.csv").read_text().splitlines()
        assert branch_csv[0] == "re,im,arclen,density"

    def test_lemmas_exit_zero(self, tmp_path, capsys):
        status = main(["lemmas", "--seed", "7", "--count", "50",
                       "--out", str(tmp_path)])
        assert status == 0
        report = json.loads((tmp_path / "lemmas.json").read_text())
        assert report["failures"] == []

    def test_malformed_spec_exit_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "n": 1, "sigma": 0.0,
            "components": [
                {"type": "exppoly", "P": [[0, 0], [1, 0]]},
                {"type": "poly", "Q": [[1, 0], [1, 0]]},
            ]}))
        status = main(["characteristic", "--input", str(bad), "--out", str(tmp_path)])
        assert status == 2
        assert "component 1" in capsys.readouterr().err

    def test_deterministic_outputs(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        for out in (out1, out2):
            assert main(["lemmas", "--seed", "3", "--count", "25",
                         "--out", str(out)]) == 0
        r1 = json.loads((out1 / "lemmas.json").read_text())
        r2 = json.loads((out2 / "lemmas.json").read_text())
        r1.pop("generated_at")
        r2.pop("generated_at")
        assert r1 == r2
