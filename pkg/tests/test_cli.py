import pytest

from eonsim import data
from eonsim.cli import main

NETWORK = str(data.data_path("nsfnet_network.json"))
ROUTES = str(data.data_path("nsfnet_routes_k3.json"))
BPSK = str(data.data_path("bit_rates_bpsk.json"))


def run_cli(tmp_path, *extra, out_name="run.dat"):
    out = tmp_path / out_name
    argv = ["--network", NETWORK, "--routes", ROUTES,
            "--algorithm", "FF", "--goal", "300",
            "--lambda", "18,90", "--mu", "10",
            "--progress", "0", "--out", str(out), *extra]
    return main(argv), out


def test_sweep_end_to_end(tmp_path, capsys):
    code, out = run_cli(tmp_path)
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert [float(line.split()[0]) for line in lines] == [1.8, 9.0]
    stdout = capsys.readouterr().out
    assert f"wrote {out}" in stdout


def test_identical_invocations_are_byte_identical(tmp_path):
    code_a, out_a = run_cli(tmp_path, out_name="a.dat")
    code_b, out_b = run_cli(tmp_path, out_name="b.dat")
    assert code_a == code_b == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_explicit_bitrates_and_max_routes(tmp_path):
    code, out = run_cli(tmp_path, "--bitrates", BPSK, "--max-routes", "1")
    assert code == 0
    assert out.exists()


def test_no_strict_audit_flag(tmp_path):
    code, out = run_cli(tmp_path, "--no-strict-audit")
    assert code == 0


def test_progress_lines_appear(tmp_path, capsys):
    out = tmp_path / "run.dat"
    code = main(["--network", NETWORK, "--routes", ROUTES,
                 "--algorithm", "FLF", "--goal", "200", "--lambda", "18",
                 "--mu", "10", "--progress", "100", "--out", str(out)])
    assert code == 0
    stdout = capsys.readouterr().out
    assert "algorithm=FLF" in stdout
    assert "progress requests=100" in stdout
    assert "done requests=200" in stdout


def test_per_bitrate_flag(tmp_path, capsys):
    out = tmp_path / "run.dat"
    code = main(["--network", NETWORK, "--routes", ROUTES,
                 "--algorithm", "FF", "--goal", "200", "--lambda", "18",
                 "--mu", "10", "--progress", "0", "--per-bitrate",
                 "--out", str(out)])
    assert code == 0
    assert "bitrate=" in capsys.readouterr().out


def test_workers_flag_matches_serial(tmp_path):
    _, serial = run_cli(tmp_path, out_name="serial.dat")
    _, parallel = run_cli(tmp_path, "--workers", "2", out_name="parallel.dat")
    assert serial.read_bytes() == parallel.read_bytes()


def test_bad_lambda_csv(tmp_path, capsys):
    out = tmp_path / "run.dat"
    code = main(["--network", NETWORK, "--routes", ROUTES,
                 "--algorithm", "FF", "--lambda", "18,abc",
                 "--out", str(out)])
    assert code == 2
    assert "lambda" in capsys.readouterr().err


def test_unknown_algorithm_rejected_by_parser(tmp_path):
    out = tmp_path / "run.dat"
    with pytest.raises(SystemExit):
        main(["--network", NETWORK, "--routes", ROUTES,
              "--algorithm", "WORST", "--out", str(out)])


def test_missing_input_file(tmp_path, capsys):
    out = tmp_path / "run.dat"
    code = main(["--network", str(tmp_path / "nope.json"), "--routes", ROUTES,
                 "--algorithm", "FF", "--goal", "10", "--lambda", "18",
                 "--out", str(out)])
    assert code == 1
    assert capsys.readouterr().err.startswith("eonsim:")
    assert not out.exists()