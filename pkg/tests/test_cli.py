"""Command-line interface: outputs, exit codes, file round-trips."""
import json
import subprocess
import sys

import pytest

from sboxkit import format_sbox_text, nonlinearity, parse_sbox_text, SBox
from sboxkit.cli import main


@pytest.fixture()
def aes_file(tmp_path, aes):
    path = tmp_path / "aes.txt"
    path.write_text(format_sbox_text(aes))
    return path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_evaluate_nl(capsys, aes_file):
    code, out, _ = run_cli(capsys, "evaluate", "--in", str(aes_file), "--property", "nl")
    assert code == 0
    assert out.strip() == "112"


def test_evaluate_json_matches_service_schema(capsys, aes_file):
    code, out, _ = run_cli(
        capsys, "evaluate", "--in", str(aes_file), "--property", "nl", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"value": 112}


def test_evaluate_full_report(capsys, tmp_path):
    path = tmp_path / "ident.txt"
    path.write_text(format_sbox_text(SBox.identity(4)))
    code, out, _ = run_cli(capsys, "evaluate", "--in", str(path))
    assert code == 0
    assert "nl = 0" in out
    assert "du = 16" in out


def test_evaluate_parse_error_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1 2 three 4")
    code, _, err = run_cli(capsys, "evaluate", "--in", str(path))
    assert code == 1
    assert "three" in err


def test_evaluate_missing_file_exit_1(capsys, tmp_path):
    code, _, err = run_cli(capsys, "evaluate", "--in", str(tmp_path / "nope.txt"))
    assert code == 1


def test_evaluate_invariant_violation_exit_2(capsys, tmp_path):
    path = tmp_path / "nonbij.txt"
    path.write_text("0 0 1 2")
    code, _, err = run_cli(
        capsys, "evaluate", "--in", str(path), "--property", "du"
    )
    assert code == 2
    assert "bijective" in err


def test_generate_deterministic(capsys, tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    assert run_cli(capsys, "generate", "--n", "8", "--seed", "1", "--out", str(a))[0] == 0
    assert run_cli(capsys, "generate", "--n", "8", "--seed", "1", "--out", str(b))[0] == 0
    assert a.read_text() == b.read_text()
    parsed = parse_sbox_text(a.read_text())
    assert sorted(parsed.table) == list(range(256))


def test_generate_bad_n_exit_2(capsys):
    code, _, err = run_cli(capsys, "generate", "--n", "20")
    assert code == 2


def test_search_immediate_success(capsys, tmp_path):
    out_file = tmp_path / "found.txt"
    code, out, _ = run_cli(
        capsys,
        "search", "--target-nl", "0", "--n", "4", "--seed", "3",
        "--out", str(out_file),
    )
    assert code == 0
    assert "status=succeeded" in out
    assert out_file.exists()


def test_search_progress_lines_non_decreasing_best(capsys):
    code, out, _ = run_cli(
        capsys,
        "search", "--target-nl", "24", "--n", "6", "--seed", "11",
        "--max-iter", "3000", "--restarts", "0",
    )
    best = [
        int(line.split("best_nl=")[1].split()[0])
        for line in out.splitlines()
        if "best_nl=" in line and "finished" not in line
    ]
    assert best == sorted(best)


def test_search_exhausted_exit_3(capsys):
    code, out, _ = run_cli(
        capsys,
        "search", "--target-nl", "6", "--n", "4", "--seed", "1",
        "--max-iter", "40", "--restarts", "1",
    )
    assert code == 3


def test_search_output_reevaluates(capsys, tmp_path):
    out_file = tmp_path / "nl100.txt"
    code, _, _ = run_cli(
        capsys,
        "search", "--target-nl", "100", "--n", "8", "--seed", "1",
        "--out", str(out_file),
    )
    assert code == 0
    found = parse_sbox_text(out_file.read_text())
    assert nonlinearity(found) >= 100


def test_classical_lists_four(capsys):
    code, out, _ = run_cli(capsys, "classical")
    assert code == 0
    for name in ("AES", "KASUMI", "PRESENT", "PRINCE"):
        assert name in out


def test_classical_prints_table(capsys, aes):
    code, out, _ = run_cli(capsys, "classical", "--name", "AES")
    assert code == 0
    assert parse_sbox_text(out) == aes


def test_classical_unknown_exit_2(capsys):
    code, _, err = run_cli(capsys, "classical", "--name", "DES")
    assert code == 2


def test_cli_json_identical_to_service_response(capsys, tmp_path):
    from fastapi.testclient import TestClient

    from sboxkit.dataset import get_classical
    from sboxkit.service import create_app

    entry = get_classical("PRESENT")
    path = tmp_path / "present.txt"
    path.write_text(format_sbox_text(entry.sbox))
    with TestClient(create_app()) as client:
        for prop in ("nl", "ccv", "wcf", "all"):
            code, out, _ = run_cli(
                capsys, "evaluate", "--in", str(path), "--property", prop, "--json"
            )
            assert code == 0
            served = client.post(
                f"/api/evaluate/{prop}",
                json={"n": entry.n, "m": entry.m, "sbox": list(entry.sbox.table)},
            ).json()
            assert json.loads(out) == served


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "sboxkit.cli", "classical"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert "AES" in result.stdout
