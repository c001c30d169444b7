"""End-to-end CLI behavior, including exit codes and batch determinism."""

import subprocess
import sys

import pytest

from rindices import (
    Family,
    generate_family,
    generate_random_connected,
    parse_edge_list,
    parse_graph6,
    full_report,
    write_graph6,
)

CLI = [sys.executable, "-m", "rindices.cli"]


def run_cli(*args, **kwargs):
    return subprocess.run(CLI + list(args), capture_output=True,
                          text=True, **kwargs)


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.edges"
    path.write_text("0 1\n1 2\n")
    return str(path)


class TestCompute:
    def test_p3_all_indices(self, p3_file):
        result = run_cli("compute", p3_file)
        assert result.returncode == 0
        assert "r1=41" in result.stdout
        assert "r2=24" in result.stdout
        assert "r3=14" in result.stdout

    def test_index_selection(self, p3_file):
        result = run_cli("compute", p3_file, "--indices", "r1,ga")
        assert result.returncode == 0
        assert "r1=41" in result.stdout
        assert "ga=" in result.stdout
        assert "abc=" not in result.stdout

    def test_disconnected_exit_3(self, tmp_path):
        path = tmp_path / "two.edges"
        path.write_text("0 1\n2 3\n")
        result = run_cli("compute", str(path))
        assert result.returncode == 3
        assert "vertex 2" in result.stderr

    def test_parse_error_exit_2(self, tmp_path):
        path = tmp_path / "bad.edges"
        path.write_text("0 zero\n")
        result = run_cli("compute", str(path))
        assert result.returncode == 2

    def test_graph6_inferred_from_extension(self, tmp_path):
        path = tmp_path / "c6.g6"
        path.write_text(write_graph6(generate_family(Family.CYCLE, 6)) + "\n")
        result = run_cli("compute", str(path))
        assert result.returncode == 0
        assert "r1=384" in result.stdout


class TestRDegrees:
    def test_p5_column(self, tmp_path):
        path = tmp_path / "p5.edges"
        path.write_text("0 1\n1 2\n2 3\n3 4\n")
        result = run_cli("rdegrees", str(path))
        rows = result.stdout.strip().split("\n")[1:]
        assert [r.split()[-1] for r in rows] == ["4", "5", "8", "5", "4"]

    def test_k4_rows(self, tmp_path):
        path = tmp_path / "k4.g6"
        path.write_text(write_graph6(generate_family(Family.COMPLETE, 4)))
        result = run_cli("rdegrees", str(path))
        rows = result.stdout.strip().split("\n")[1:]
        assert all(r.split()[1:] == ["3", "9", "27", "36"] for r in rows)

    def test_star_rows(self, tmp_path):
        path = tmp_path / "s4.edges"
        path.write_text("0 1\n0 2\n0 3\n")
        result = run_cli("rdegrees", str(path))
        rows = [r.split() for r in result.stdout.strip().split("\n")[1:]]
        assert rows[0][2:] == ["3", "1", "4"]
        assert all(r[4] == "6" for r in rows[1:])


class TestGenerate:
    def test_cycle_edge_list(self):
        result = run_cli("generate", "cycle", "5")
        assert result.returncode == 0
        g = parse_edge_list(result.stdout)
        assert g == generate_family(Family.CYCLE, 5)

    def test_complete_graph6_round_trip(self, tmp_path):
        out = tmp_path / "k4.g6"
        result = run_cli("generate", "complete", "4", "--format", "graph6",
                         "--out", str(out))
        assert result.returncode == 0
        g = parse_graph6(out.read_text().strip())
        assert g.m == 6

    def test_star_2(self):
        result = run_cli("generate", "star", "2")
        assert parse_edge_list(result.stdout).m == 1

    def test_bad_order_exit_2(self):
        assert run_cli("generate", "cycle", "2").returncode == 2

    @pytest.mark.parametrize("family", [f.value for f in Family])
    def test_round_trip_matches_in_memory(self, family, tmp_path):
        for n in (3, 7, 30):
            for fmt in ("edgelist", "graph6"):
                out = tmp_path / f"{family}{n}.{fmt}"
                run_cli("generate", family, str(n), "--format", fmt,
                        "--out", str(out))
                text = out.read_text()
                g = parse_graph6(text.strip()) if fmt == "graph6" \
                    else parse_edge_list(text)
                expected = generate_family(family, n)
                assert g == expected
                assert full_report(g) == full_report(expected)


class TestVerify:
    def test_cycle_all_match(self, tmp_path):
        out = tmp_path / "cycle.csv"
        result = run_cli("verify", "cycle", "--n-range", "3..100",
                         "--out", str(out))
        assert result.returncode == 0
        lines = out.read_text().strip().split("\n")
        assert len(lines) == 1 + 294
        assert all(line.endswith("Match") for line in lines[1:])

    def test_star_mismatches_do_not_fail(self, tmp_path):
        out = tmp_path / "star.csv"
        result = run_cli("verify", "star", "--n-range", "3..10",
                         "--out", str(out))
        assert result.returncode == 0
        content = out.read_text()
        assert "Mismatch" in content

    def test_all_families(self, tmp_path):
        out = tmp_path / "all.csv"
        result = run_cli("verify", "all", "--n-range", "3..10",
                         "--out", str(out))
        assert result.returncode == 0
        content = out.read_text()
        for family in ("path", "cycle", "complete", "star"):
            assert f"{family}," in content

    def test_malformed_range_exit_2(self):
        assert run_cli("verify", "cycle", "--n-range", "3-10").returncode == 2
        assert run_cli("verify", "cycle", "--n-range", "9..2").returncode == 2


class TestBatch:
    def test_cycle_corpus(self, tmp_path):
        src = tmp_path / "cycles.g6"
        src.write_text("".join(
            write_graph6(generate_family(Family.CYCLE, n)) + "\n"
            for n in (3, 4, 5)))
        out = tmp_path / "out.csv"
        result = run_cli("batch", str(src), "--out", str(out))
        assert result.returncode == 0
        lines = out.read_text().strip().split("\n")
        header = lines[0].split(",")
        r1_col = header.index("r1")
        assert [line.split(",")[r1_col] for line in lines[1:]] == \
            ["192", "256", "320"]

    def test_corrupt_line_isolated(self, tmp_path):
        src = tmp_path / "mixed.g6"
        src.write_text("A_\nA!\nBw\n")
        out = tmp_path / "out.csv"
        result = run_cli("batch", str(src), "--out", str(out))
        assert result.returncode == 0
        lines = out.read_text().strip().split("\n")[1:]
        assert len(lines) == 3
        assert lines[0].endswith("Ok")
        assert "ParseError" in lines[1]
        assert lines[2].endswith("Ok")

    def test_k2_row(self, tmp_path):
        src = tmp_path / "k2.g6"
        src.write_text("A_\n")
        out = tmp_path / "out.csv"
        run_cli("batch", str(src), "--out", str(out))
        row = out.read_text().strip().split("\n")[1].split(",")
        assert row[3:6] == ["8", "4", "4"]

    def test_disconnected_row(self, tmp_path):
        src = tmp_path / "dis.g6"
        src.write_text("B?\n")  # two isolated vertices... n=3 empty graph
        out = tmp_path / "out.csv"
        run_cli("batch", str(src), "--out", str(out))
        row = out.read_text().strip().split("\n")[1]
        assert row.endswith("Disconnected")

    def test_parallel_determinism(self, tmp_path):
        src = tmp_path / "corpus.g6"
        src.write_text("".join(
            write_graph6(generate_random_connected(n % 25 + 2, 0.3, n)) + "\n"
            for n in range(200)))
        out1 = tmp_path / "j1.csv"
        out8 = tmp_path / "j8.csv"
        run_cli("batch", str(src), "--out", str(out1), "--jobs", "1")
        run_cli("batch", str(src), "--out", str(out8), "--jobs", "8")
        assert out1.read_bytes() == out8.read_bytes()

    def test_missing_input_exit_2(self, tmp_path):
        assert run_cli("batch", str(tmp_path / "nope.g6")).returncode == 2
