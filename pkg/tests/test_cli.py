import subprocess
import sys

import pytest

from geodetic.cli import main
from geodetic.graph import parse_edge_list

P4_TEXT = "0 1\n1 2\n2 3\n"
C6_TEXT = "0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n"


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text(P4_TEXT)
    return str(path)


@pytest.fixture
def c6_file(tmp_path):
    path = tmp_path / "c6.txt"
    path.write_text(C6_TEXT)
    return str(path)


class TestGenerate:
    def test_writes_connected_graph(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        code = main(["generate", "--family", "er", "--n", "12",
                     "--density", "0.3", "-o", str(out)])
        assert code == 0
        g = parse_edge_list(out.read_text(), strict=True)
        assert g.n == 12
        assert g.m == 19  # floor(0.3 * 66)
        assert "n=12 m=19 seed=0" in capsys.readouterr().err

    def test_stdout_by_default(self, capsys):
        code = main(["generate", "--family", "ba", "--n", "8", "--edges", "10"])
        assert code == 0
        g = parse_edge_list(capsys.readouterr().out)
        assert (g.n, g.m) == (8, 10)

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        args = ["generate", "--family", "ws", "--n", "15", "--edges", "30",
                "--seed", "7"]
        assert main(args + ["-o", str(a)]) == 0
        assert main(args + ["-o", str(b)]) == 0
        assert a.read_text() == b.read_text()

    def test_density_and_edges_conflict(self, capsys):
        code = main(["generate", "--family", "er", "--n", "10",
                     "--density", "0.5", "--edges", "20"])
        assert code == 1

    def test_neither_density_nor_edges(self):
        assert main(["generate", "--family", "er", "--n", "10"]) == 1

    def test_impossible_edge_count_is_data_error(self):
        code = main(["generate", "--family", "er", "--n", "12", "--edges", "5"])
        assert code == 2


class TestSolve:
    def test_all_algorithms_agree_on_path(self, p4_file, capsys):
        assert main(["solve", p4_file]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        names = [l.split()[0] for l in lines]
        assert names == ["exact", "greedy", "greedy-addone", "locally-greedy"]
        assert all(l.split()[1] == "2" for l in lines)
        assert "optimal" in lines[0]
        assert "upper bound" in lines[1]

    def test_brute_force(self, p4_file, capsys):
        assert main(["solve", p4_file, "-a", "brute"]) == 0
        line = capsys.readouterr().out.strip()
        assert line.startswith("brute-force")
        assert line.split()[1] == "2"

    def test_brute_refuses_large_graph(self, tmp_path):
        path = tmp_path / "p30.txt"
        path.write_text("".join(f"{i} {i + 1}\n" for i in range(29)))
        assert main(["solve", str(path), "-a", "brute"]) == 1

    def test_bounds(self, p4_file, capsys):
        assert main(["solve", p4_file, "-a", "bounds"]) == 0
        out = capsys.readouterr().out
        assert "trivial-bound" in out
        assert "diameter-bound" in out
        assert out.split()[1] == "4"
        assert out.split()[3] == "2"

    def test_budget_prints_upper_bound_marker(self, c6_file, capsys):
        assert main(["solve", c6_file, "-a", "exact", "--node-budget", "1"]) == 0
        out = capsys.readouterr().out
        assert "<=" in out
        assert "budget exhausted" in out

    def test_disconnected_is_data_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1\n2 3\n")
        assert main(["solve", str(path)]) == 2

    def test_garbage_is_data_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1\nnot numbers\n")
        assert main(["solve", str(path)]) == 2

    def test_missing_file_is_usage_error(self):
        assert main(["solve", "/nonexistent/file.txt"]) == 1

    def test_one_based(self, tmp_path, capsys):
        path = tmp_path / "tri.txt"
        path.write_text("1 2\n2 3\n1 3\n")
        assert main(["solve", str(path), "--one-based", "-a", "exact"]) == 0
        assert capsys.readouterr().out.split()[1] == "3"


class TestVerify:
    def test_geodetic_set(self, p4_file, capsys):
        assert main(["verify", p4_file, "0", "3"]) == 0
        assert "geodetic: closure covers 4 of 4" in capsys.readouterr().out

    def test_non_geodetic_set(self, p4_file, capsys):
        assert main(["verify", p4_file, "0", "2"]) == 0
        assert "not geodetic: closure covers 3 of 4" in capsys.readouterr().out

    def test_one_based(self, tmp_path, capsys):
        path = tmp_path / "p4_one_based.txt"
        path.write_text("1 2\n2 3\n3 4\n")
        assert main(["verify", str(path), "--one-based", "1", "4"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("geodetic")

    def test_out_of_range_vertex(self, p4_file):
        assert main(["verify", p4_file, "0", "9"]) == 1


class TestExportIlp:
    def test_default_output_path(self, tmp_path, capsys):
        src = tmp_path / "p3.txt"
        src.write_text("0 1\n1 2\n")
        assert main(["export-ilp", str(src)]) == 0
        text = (tmp_path / "p3.lp").read_text()
        assert text.startswith("Minimize")
        assert text.endswith("End\n")
        assert " cover1: y0_1 + y0_2 + y1_2 + x1 >= 1" in text

    def test_explicit_output_path(self, p4_file, tmp_path):
        out = tmp_path / "model.lp"
        assert main(["export-ilp", p4_file, "-o", str(out)]) == 0
        assert "Binary" in out.read_text()


class TestBench:
    def test_small_grid(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        code = main(["bench", "--scheme", "standard", "--family", "er",
                     "--max-n", "20", "--no-timing", "-o", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 9  # header + ER sizes {10,20} x 4 densities
        assert lines[0].startswith("family,n,m,seed")
        assert [l.split(",")[3] for l in lines[1:]] == [str(s) for s in range(8)]
        assert "wrote 8 rows" in capsys.readouterr().err

    def test_no_timing_reproducible(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["bench", "--family", "ba", "--max-n", "10", "--no-timing"]
        assert main(args + ["-o", str(a)]) == 0
        assert main(args + ["-o", str(b)]) == 0
        assert a.read_text() == b.read_text()

    def test_pretty_prints_table(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        code = main(["bench", "--family", "ws", "--max-n", "10",
                     "--no-timing", "--pretty", "-o", str(out)])
        assert code == 0
        assert capsys.readouterr().out.splitlines()[0].lstrip().startswith("family")

    def test_bad_jobs(self, tmp_path):
        assert main(["bench", "--jobs", "0", "-o", str(tmp_path / "x.csv")]) == 1


class TestEntryPoints:
    def test_help(self, capsys):
        assert main(["--help"]) == 0
        assert "Usage" in capsys.readouterr().out

    def test_module_invocation(self, p4_file):
        proc = subprocess.run(
            [sys.executable, "-m", "geodetic", "solve", p4_file, "-a", "greedy"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.split()[1] == "2"

    def test_module_exit_code_passthrough(self):
        proc = subprocess.run(
            [sys.executable, "-m", "geodetic", "solve", "/missing.txt"],
            capture_output=True, text=True)
        assert proc.returncode == 1
