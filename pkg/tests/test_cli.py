import pytest

from app.cli import EXIT_RUNTIME, EXIT_USAGE, EXIT_VERIFY, main
from app.services.bench import SCALING_HEADER, SLICE_HEADER
from app.services.engine import solve_local
from app.services.graph_io import format_graph, load_graph
from app.services.verify import CheckResult, CheckStatus

@pytest.fixture
def k4_file(tmp_path, k4_golden):
    path = tmp_path / "k4.txt"
    path.write_text(format_graph(k4_golden), encoding="utf-8")
    return str(path)

def test_gen_writes_graph(tmp_path, capsys):
    """Test gen writes a loadable complete triangle"""
    out = tmp_path / "g.txt"
    assert main(["gen", "--nodes", "3", "--density", "1", "--seed", "0", "--out", str(out)]) == 0
    g = load_graph(out)
    assert g.n == 3
    assert g.edge_count == 3
    assert out.read_text(encoding="utf-8").splitlines()[0] == "3"
    assert "3 edges" in capsys.readouterr().out

def test_gen_bad_density(tmp_path, capsys):
    """Test an out-of-range density exits with a usage error"""
    assert main(["gen", "--nodes", "10", "--density", "0", "--out", str(tmp_path / "g.txt")]) == EXIT_USAGE
    assert "density" in capsys.readouterr().err

def test_solve_golden(k4_file, capsys):
    """Test solve prints the optimum of the golden instance"""
    code = main(["solve", "--graph", k4_file, "--dmax", "2", "--pop", "4", "--iters", "20", "--seed", "1", "--threads", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "final weight: 12" in out
    assert "iterations: " in out
    assert "avg_iter_s: " in out

def test_solve_writes_csv(k4_file, tmp_path):
    """Test --csv writes the scaling header and one local row"""
    csv_path = tmp_path / "run.csv"
    assert main(["solve", "--graph", k4_file, "--dmax", "2", "--iters", "5", "--csv", str(csv_path)]) == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0].split(",") == SCALING_HEADER
    assert lines[1].startswith("local,0,1,4,5,")
    assert lines[1].endswith(",12")

def test_central_csv_reports_satellite_threads(k4_file, tmp_path, monkeypatch):
    """Test the central CSV row carries the worker threads the satellites announced"""
    async def two_satellites(g, cfg, endpoint, satellites):
        report = await solve_local(g, cfg)
        return report.model_copy(update={"mode": "distributed", "satellites": 2, "satellite_workers": [2, 2]})

    monkeypatch.setattr("app.cli.central_serve", two_satellites)
    csv_path = tmp_path / "central.csv"
    argv = ["central", "--graph", k4_file, "--dmax", "2", "--iters", "5", "--satellites", "2", "--csv", str(csv_path)]
    assert main(argv) == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[1].startswith("distributed,2,2,4,5,")

def test_solve_missing_graph(tmp_path, capsys):
    """Test a missing file is a runtime error"""
    assert main(["solve", "--graph", str(tmp_path / "none.txt"), "--dmax", "2"]) == EXIT_RUNTIME
    assert capsys.readouterr().err.startswith("Error:")

def test_solve_infeasible(tmp_path, star):
    """Test construction failure is a runtime error"""
    path = tmp_path / "star.txt"
    path.write_text(format_graph(star), encoding="utf-8")
    assert main(["solve", "--graph", str(path), "--dmax", "2"]) == EXIT_RUNTIME

def test_solve_malformed_graph(tmp_path):
    """Test parse errors are runtime errors"""
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 1 x\n", encoding="utf-8")
    assert main(["solve", "--graph", str(path), "--dmax", "2"]) == EXIT_RUNTIME

def test_solve_non_utf8_graph(tmp_path):
    """Test an undecodable graph file is a runtime error"""
    path = tmp_path / "latin1.txt"
    path.write_bytes(b"3\n0 1 1\n\xff 2 2\n")
    assert main(["solve", "--graph", str(path), "--dmax", "2"]) == EXIT_RUNTIME

def test_solve_invalid_parameters(k4_file):
    """Test parameter validation exits with a usage error"""
    assert main(["solve", "--graph", k4_file, "--dmax", "0"]) == EXIT_USAGE
    assert main(["solve", "--graph", k4_file, "--dmax", "2", "--pop", "1"]) == EXIT_USAGE

def test_missing_required_option():
    """Test click usage errors"""
    assert main(["solve", "--dmax", "2"]) == EXIT_USAGE
    assert main(["central", "--graph", "x", "--dmax", "2", "--satellites", "0"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE

def test_verify_passes(k4_file, capsys):
    """Test verify reports every check and exits 0"""
    assert main(["verify", "--graph", k4_file, "--dmax", "2", "--iters", "50"]) == 0
    out = capsys.readouterr().out
    assert "[PASSED ] bruteforce_oracle" in out
    assert "8/8 checks passed" in out

def test_verify_failure_exit_code(k4_file, monkeypatch):
    """Test a failed check exits with the verification code"""
    async def failing(g, c, options=None):
        return [CheckResult(name="pao_safety", status=CheckStatus.FAILED, detail="forced")]

    monkeypatch.setattr("app.cli.run_verify", failing)
    assert main(["verify", "--graph", k4_file, "--dmax", "2"]) == EXIT_VERIFY

def test_bench_memory(tmp_path, capsys):
    """Test a tiny sweep over the in-memory transport"""
    csv_path = tmp_path / "bench.csv"
    code = main([
        "bench", "--sizes", "16", "--modes", "local,dist:1", "--iters", "3", "--warmup", "1",
        "--pop", "4", "--transport", "memory", "--csv", str(csv_path),
        "--slice-sizes", "16,32", "--prunes", "100",
    ])
    assert code == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0].split(",") == SCALING_HEADER
    assert [line.split(",")[:2] for line in lines[1:]] == [["distributed", "1"], ["local", "0"]]
    out = capsys.readouterr().out.splitlines()
    assert out[0].split(",") == SLICE_HEADER
    assert len(out) == 3

def test_bench_unknown_mode():
    """Test bad modes are usage errors"""
    assert main(["bench", "--sizes", "16", "--modes", "remote", "--transport", "memory"]) == EXIT_USAGE
