"""CLI surface: exit codes, formats, and the pd subcommand."""

import json

import pytest

from detvol.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_holds(self, capsys):
        code, out, _ = run(capsys, "check", "R(1,1,1,1,1)")
        assert code == 0
        assert "det               8" in out
        assert "verdict           holds" in out

    def test_vacuous(self, capsys):
        code, out, _ = run(capsys, "check", "R(1,1,1)")
        assert code == 0
        assert "vacuous" in out

    def test_pretzel(self, capsys):
        code, out, _ = run(capsys, "check", "P(2,3,7)")
        assert code == 0
        assert "det               41" in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "check", "Z(1)")
        assert code == 1
        assert "error:" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "check", "W(4)", "--format", "json")
        assert code == 0
        row = json.loads(out)[0]
        assert row["det"] == "384"
        assert row["verdict"] == "holds"

    def test_flag_before_subcommand(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "check", "W(4)")
        assert code == 0
        assert json.loads(out)[0]["det"] == "384"


class TestConstants:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "constants")
        assert code == 0
        assert "1.01494" in out
        assert "3.66386237" in out
        assert "vol(B_2 ) = 0.000000000000" in out


class TestEnumerate:
    def test_small(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--t-max", "3")
        assert code == 0
        assert "0 violations" in out

    def test_bad_input(self, capsys):
        code, _, err = run(capsys, "enumerate", "--t-max", "2")
        assert code == 1


class TestSweep:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "--family", "R", "--sum-max", "4",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("spec,family,")
        assert len(lines) == 2 ** 4  # header + 15 sequences

    def test_table(self, capsys):
        code, out, _ = run(capsys, "sweep", "--family", "W", "--sum-max", "9")
        assert code == 0
        assert "W(2)" in out


class TestPd:
    def test_text_file(self, capsys, tmp_path):
        f = tmp_path / "fig8.pd"
        f.write_text("X 0 1 4 3\nX 4 2 6 5\nX 3 5 8 0\nX 8 6 2 1\n")
        code, out, _ = run(capsys, "pd", str(f))
        assert code == 0
        assert "tau(shaded)   5" in out
        assert "tau(white)    5" in out
        assert "{2: 2, 3: 4}" in out

    def test_json_file(self, capsys, tmp_path):
        f = tmp_path / "fig8.json"
        f.write_text(json.dumps([[0, 1, 4, 3], [4, 2, 6, 5], [3, 5, 8, 0], [8, 6, 2, 1]]))
        code, out, _ = run(capsys, "pd", str(f))
        assert code == 0
        assert "twist regions 2" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "pd", "/nonexistent/nope.pd")
        assert code == 1

    def test_malformed(self, capsys, tmp_path):
        f = tmp_path / "bad.pd"
        f.write_text("X 1 1 1 1\n")
        code, _, err = run(capsys, "pd", str(f))
        assert code == 1
        assert "error" in err


class TestConfigValidation:
    def test_bad_precision(self, capsys):
        code, _, err = run(capsys, "--precision", "20", "constants")
        assert code == 1

    def test_bad_workers(self, capsys):
        code, _, err = run(capsys, "--workers", "0", "constants")
        assert code == 1

    def test_workers_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("DETVOL_WORKERS", "2")
        code, out, _ = run(capsys, "sweep", "--family", "R", "--sum-max", "3")
        assert code == 0
        assert "R(3)" in out
