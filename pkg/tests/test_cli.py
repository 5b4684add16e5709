"""Unit tests for the command-line interface (run in-process)."""

import pytest

from p5reps.cli import main

PHI6_TEXT = """\
name my_phi6
p 3
ngens 5
comm 2 1 : 0 0 1 0 0
comm 3 1 : 0 0 0 1 0
comm 3 2 : 0 0 0 0 1
"""


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestList:
    def test_p3_table(self, capsys):
        code, out = run(["list", "--p", "3"], capsys)
        assert code == 0
        assert "Phi_8(32)" in out
        assert "Phi_3(311)b_1" not in out

    def test_p5_includes_p5_only_entries(self, capsys):
        code, out = run(["list", "--p", "5"], capsys)
        assert code == 0
        assert "Phi_3(311)b_1" in out and "Phi_9(2111)b_1" in out

    def test_deterministic(self, capsys):
        _, first = run(["list", "--p", "3"], capsys)
        _, second = run(["list", "--p", "3"], capsys)
        assert first == second


class TestPairs:
    def test_orbit_rows(self, capsys):
        code, out = run(["pairs", "--group", "Phi_5(1^5)", "--p", "3"], capsys)
        assert code == 0
        assert "orbits=42" in out
        assert "chi1=9" in out

    def test_unknown_group(self, capsys):
        assert main(["pairs", "--group", "Phi_0(0)", "--p", "3"]) == 2


class TestReps:
    def test_export_files(self, tmp_path, capsys):
        code, out = run(
            ["reps", "--group", "Phi_5(1^5)", "--p", "3", "--out", str(tmp_path)],
            capsys,
        )
        assert code == 0
        files = sorted(tmp_path.glob("*.rep"))
        assert len(files) == out.count("wrote ") == 42
        text = files[-1].read_text()
        assert "group Phi_5(1^5)" in text
        assert "degree 18" in text or "degree" in text
        # Entries are exact num/den strings.
        assert "/1" in text and "." not in text.split("generators")[1]


class TestWedderburn:
    def test_formula_and_oracle_agree(self, capsys):
        code, out = run(
            ["wedderburn", "--group", "Phi_8(32)", "--p", "3", "--method", "both"],
            capsys,
        )
        assert code == 0
        assert "M_9(Q(zeta_3)) x 1" in out
        assert "dimension 243 = |G| 243: OK" in out

    def test_formula_only(self, capsys):
        code, out = run(
            ["wedderburn", "--group", "Phi_2(41)", "--p", "3", "--method", "formula"],
            capsys,
        )
        assert code == 0
        assert "dimension 243" in out


class TestIngest:
    def test_echo_and_classification(self, tmp_path, capsys):
        path = tmp_path / "phi6.pres"
        path.write_text(PHI6_TEXT)
        code, out = run(["ingest", "--file", str(path)], capsys)
        assert code == 0
        assert "# classification: Phi_6" in out
        assert "# consistent: order 243" in out

    def test_other_commands_accept_files(self, tmp_path, capsys):
        path = tmp_path / "phi6.pres"
        path.write_text(PHI6_TEXT)
        code, out = run(
            ["wedderburn", "--group", str(path), "--p", "3"], capsys
        )
        assert code == 0
        assert "M_3(Q(zeta_9)) x 2" in out


class TestVerify:
    def test_single_group(self, capsys):
        code, out = run(["verify", "--group", "Phi_7(1^5)", "--p", "3"], capsys)
        assert code == 0
        assert "failures=0" in out
        for check in ("catalog", "pairs", "cross", "reps", "wedderburn",
                      "predicates"):
            assert f"{check}=ok" in out

    def test_fixture_group(self, capsys):
        code, out = run(
            ["verify", "--group", "Phi_10_fixture_p3", "--p", "3"], capsys
        )
        assert code == 0
        assert "failures=0" in out
