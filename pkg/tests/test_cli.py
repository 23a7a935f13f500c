"""Command-line surface, driven through main() with captured stdio."""

import json

import pytest

from cutdown.cli import main

from refdata import CUT_N6_L46, CUT_N6_L52, DB_N3_K4


def run_cli(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_reference(capsys):
    code, out, err = run_cli(capsys, "generate", "--n", "6", "--k", "2",
                             "--len", "46")
    assert code == 0
    assert out == CUT_N6_L46 + "\n"


def test_generate_csv_format(capsys):
    code, out, _ = run_cli(capsys, "generate", "--n", "3", "--k", "4",
                           "--len", "64", "--format", "csv")
    assert code == 0
    symbols = out.strip().split(",")
    assert len(symbols) == 64
    assert "".join(symbols) in DB_N3_K4 + DB_N3_K4


def test_generate_successor_mode(capsys):
    code, out, _ = run_cli(capsys, "generate", "--n", "6", "--len", "46",
                           "--mode", "successor", "--start", "000001")
    assert code == 0
    assert len(out.strip()) == 46


def test_generate_range_error_exit_2(capsys):
    code, out, err = run_cli(capsys, "generate", "--n", "6", "--k", "2",
                             "--len", "512")
    assert code == 2
    assert "64 < L <= 4096" not in err  # message names the n=6 interval
    assert "32 < L <= 64" in err


def test_generate_digits_rejected_for_wide_alphabets(capsys):
    code, _, err = run_cli(capsys, "generate", "--n", "2", "--k", "12",
                           "--len", "100", "--format", "digits")
    assert code == 2
    assert "csv" in err


def test_params_json(capsys):
    code, out, _ = run_cli(capsys, "params", "--n", "6", "--k", "2",
                           "--len", "46", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 6, "k": 2, "L": 46, "m": 4, "h": 6, "t": 1,
                       "s": 5, "markers": ["001001", "010101"]}
    assert list(payload) == ["n", "k", "L", "m", "h", "t", "s", "markers"]


def test_params_text(capsys):
    code, out, _ = run_cli(capsys, "params", "--n", "6", "--len", "46")
    assert code == 0
    assert "m" in out and "001001" in out


def test_verify_accepts_reference(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "verify", "--n", "6", "--k", "2",
                           stdin=CUT_N6_L52, monkeypatch=monkeypatch)
    assert code == 0
    assert "ok" in out


def test_verify_rejects_duplicate(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "verify", "--n", "3", "--k", "2", "--json",
                           stdin="00100", monkeypatch=monkeypatch)
    assert code == 1
    payload = json.loads(out)
    assert payload["ok"] is False
    assert payload["first_duplicate"] == {"window": "000", "positions": [4, 5]}


def test_verify_reads_file(capsys, tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text(CUT_N6_L46 + "\n")
    code, out, _ = run_cli(capsys, "verify", "--n", "6", "--len", "46",
                           str(path))
    assert code == 0


def test_verify_csv_input(capsys, monkeypatch):
    code, _, _ = run_cli(capsys, "verify", "--n", "2", "--k", "4",
                         stdin="0,3,1,2", monkeypatch=monkeypatch)
    assert code == 0


def test_generate_pipe_verify(capsys, monkeypatch):
    for n, k, L in [(5, 2, 20), (6, 2, 46), (3, 4, 50), (3, 3, 20)]:
        code, out, _ = run_cli(capsys, "generate", "--n", str(n), "--k",
                               str(k), "--len", str(L))
        assert code == 0
        code, _, _ = run_cli(capsys, "verify", "--n", str(n), "--k", str(k),
                             "--len", str(L), stdin=out,
                             monkeypatch=monkeypatch)
        assert code == 0


def test_rank(capsys):
    code, out, _ = run_cli(capsys, "rank", "000101")
    assert code == 0
    assert out.strip() == "2"


def test_rank_periodic_input_exit_2(capsys):
    code, _, err = run_cli(capsys, "rank", "010101")
    assert code == 2
    assert "Lyndon" in err or "periodic" in err


def test_count(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "6", "--w", "4")
    assert code == 0 and out.strip() == "15"
    code, out, _ = run_cli(capsys, "count", "--n", "6", "--w", "2",
                           "--lyndon")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(capsys, "count", "--n", "80", "--w", "40")
    assert code == 0
    assert out.strip() == str(__import__("math").comb(80, 40))


def test_unknown_subcommand_exit_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2
