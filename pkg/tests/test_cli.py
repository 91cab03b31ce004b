"""Command line behavior: formats, determinism, exit codes."""

import csv
import io
import json
import subprocess
import sys

import pytest

from g2cells import cli, fixtures


def run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_distinguished_rows(capsys):
    code, out = run_cli(["distinguished", "--word", "121212"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9  # header + 8 rows
    names = {line.split()[0] for line in lines[1:]}
    assert names == set(fixtures.DISTINGUISHED_I)


def test_distinguished_rejects_bad_word(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["distinguished", "--word", "131212"])
    assert exc.value.code == 2


def test_epsilon_output(capsys):
    code, out = run_cli(["epsilon", "--params", "1,2,3,5,7,11"], capsys)
    assert code == 0
    assert out.split()[0] == "1/11"
    code, out = run_cli(["epsilon", "--params", "0,0,0,0,0,0"], capsys)
    assert code == 0
    assert out.strip() == "not-factorizable"


def test_epsilon_parses_fraction_strings(capsys):
    code, out = run_cli(["epsilon", "--params", "1/2,2,3,5,7,11/3"], capsys)
    assert code == 0
    assert len(out.split()) == 6


def test_alpha_output(capsys):
    code, out = run_cli(["alpha", "--family", "x21x12", "--params", "1,2,3,5"], capsys)
    assert code == 0
    assert out.split()[0] == "-1/5"


def test_cell_point_output(capsys):
    code, out = run_cli(
        ["cell-point", "--family", "x21x12", "--params", "1,2,3,5"], capsys
    )
    assert code == 0
    assert "chain-valid      True" in out


def test_minors_output(capsys):
    code, out = run_cli(["minors"], capsys)
    assert code == 0
    assert "-e3    = b + d + f" in out
    assert "e3-e1  = a*b^3*c^2*d^3*e" in out


def test_euler_csv(capsys):
    code, out = run_cli(["euler", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["component", "codim0", "codim1", "codim2", "euler"]
    assert len(rows) == 12
    assert rows[11] == ["11", "12", "16", "6", "2"]


def test_bijection_text(capsys):
    code, out = run_cli(["bijection"], capsys)
    assert code == 0
    assert "I       10" in out and "J       9" in out


def test_classify_json_round_trip(capsys):
    code, out = run_cli(["classify", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 76
    by_cell = {row["cell"]: row for row in payload}
    assert by_cell["0+*0+*"]["component"] == 11
    assert by_cell["0+*0+*"]["signs"] == "---+++"
    assert set(payload[0]) == {"cell", "family", "signs", "letter", "component", "codim"}


def test_classify_single_cell(capsys):
    code, out = run_cli(["classify", "--signs", "+00+**"], capsys)
    assert code == 0
    assert "F" in out and "6" in out


def test_graph_deterministic(capsys):
    code1, out1 = run_cli(["graph", "--format", "json"], capsys)
    code2, out2 = run_cli(["graph", "--format", "json"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert len(payload) == 22  # 11 components x 2 word columns


def test_out_file(tmp_path, capsys):
    target = tmp_path / "euler.csv"
    code, out = run_cli(["euler", "--format", "csv", "--out", str(target)], capsys)
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("component,")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "g2cells", "minors"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert "b + d + f" in proc.stdout
