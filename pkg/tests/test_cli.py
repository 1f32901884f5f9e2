from fractions import Fraction

import pytest

from mimicknet.cli import main
from mimicknet.fileio import load_network, parse_network
from mimicknet.mincut import min_separating_cut
from mimicknet.network import enumerate_bipartitions


def run(*argv) -> int:
    return main([str(a) for a in argv])


class TestGen:
    def test_bipartite_k6_file(self, tmp_path, capsys):
        out = tmp_path / "b6.net"
        assert run("gen", "bipartite", "--k", 6, "-o", out) == 0
        net, emb = load_network(out)
        assert net.n == 21 and emb is None

    def test_grid_k4_file_with_rotations(self, tmp_path):
        out = tmp_path / "g4.net"
        assert run("gen", "grid", "--k", 4, "-o", out) == 0
        net, emb = load_network(out)
        assert net.n == 24 and emb is not None

    def test_random_planar_valid_and_deterministic(self, tmp_path):
        a, b = tmp_path / "a.net", tmp_path / "b.net"
        assert run("gen", "random-planar", "--n", 20, "--k", 4, "--seed", 1, "-o", a) == 0
        assert run("gen", "random-planar", "--n", 20, "--k", 4, "--seed", 1, "-o", b) == 0
        assert a.read_bytes() == b.read_bytes()
        net, emb = load_network(a)
        assert net.n == 20 and net.k == 4 and emb is not None

    def test_random_planar_needs_seed(self):
        assert run("gen", "random-planar", "--n", 10, "--k", 3) == 2

    def test_star(self, capsys):
        assert run("gen", "star", "--k", 4) == 0
        net, emb = parse_network(capsys.readouterr().out)
        assert net.n == 5 and emb is not None

    def test_bad_params_exit_2(self):
        assert run("gen", "bipartite", "--k", 5) == 2


class TestCompressVerify:
    @pytest.fixture()
    def path_file(self, tmp_path):
        p = tmp_path / "p.net"
        p.write_text("p mimick 3 2 2\nt 0 2\ne 0 1 3/1\ne 1 2 5/1\n")
        return p

    def test_compress_path(self, tmp_path, path_file):
        out = tmp_path / "p.mim"
        sidecar = tmp_path / "p.map"
        assert run("compress", path_file, "-o", out, "--map-out", sidecar) == 0
        net, _ = load_network(out)
        assert net.n == 2 and net.edges[0].cost == 3
        assert sidecar.read_text().splitlines() == ["class 0 0", "class 1 1 2"]

    def test_verify_pass_and_fail(self, tmp_path, path_file):
        good = tmp_path / "good.net"
        good.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 3/1\n")
        bad = tmp_path / "bad.net"
        bad.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 4/1\n")
        assert run("verify", path_file, good) == 0
        assert run("verify", path_file, bad) == 1

    def test_single_edge_unchanged(self, tmp_path):
        src = tmp_path / "e.net"
        src.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 7/2\n")
        out = tmp_path / "e.mim"
        assert run("compress", src, "--method", "signature", "-o", out) == 0
        net, _ = load_network(out)
        assert net.n == 2 and net.edges[0].cost == Fraction(7, 2)

    def test_compress_grid_verifies(self, tmp_path):
        g = tmp_path / "g3.net"
        assert run("gen", "grid", "--k", 3, "-o", g) == 0
        out = tmp_path / "g3.mim"
        assert run("compress", g, "-o", out) == 0
        orig, _ = load_network(g)
        mim, _ = load_network(out)
        for bp in enumerate_bipartitions(orig.k):
            assert (
                min_separating_cut(orig, bp).value == min_separating_cut(mim, bp).value
            )

    def test_generalized_flag(self, tmp_path, path_file):
        good = tmp_path / "good.net"
        good.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 3/1\n")
        assert run("verify", path_file, good, "--generalized") == 0

    def test_parse_error_exit_2(self, tmp_path):
        broken = tmp_path / "broken.net"
        broken.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 0/1\n")
        assert run("verify", broken, broken) == 2


class TestExperiments:
    def test_rank_grid(self, capsys):
        assert run("experiment", "rank", "--family", "grid", "--k", 3) == 0
        out = capsys.readouterr().out
        assert "rank >= 4" in out and "PASS" in out

    def test_rank_needs_family(self):
        assert run("experiment", "rank", "--k", 3) == 2

    def test_grid_lemma_records(self, tmp_path, capsys):
        rec = tmp_path / "rec.jsonl"
        assert run("experiment", "grid-lemma", "--k", 3, "--records", rec) == 0
        lines = rec.read_text().splitlines()
        assert len(lines) == 1 + 4  # header + one record per staircase cut
        assert '"verdict": "PASS"' in lines[1]

    def test_bounds(self, tmp_path):
        net_file = tmp_path / "rp.net"
        assert run("gen", "random-planar", "--n", 16, "--k", 3, "--seed", 2, "-o", net_file) == 0
        assert run("experiment", "bounds", "--input", net_file, "--seed", 0, "--pairs", 10) == 0

    def test_bounds_needs_seed(self, tmp_path):
        net_file = tmp_path / "rp.net"
        run("gen", "random-planar", "--n", 10, "--k", 3, "--seed", 2, "-o", net_file)
        assert run("experiment", "bounds", "--input", net_file) == 2

    def test_tc_collision_small(self, capsys):
        assert run("experiment", "tc-collision", "--k", 6, "--samples", 5, "--seed", 7) == 0
        assert "PASS" in capsys.readouterr().out


class TestTC:
    def test_build_query_round_trip(self, tmp_path, capsys):
        g = tmp_path / "g3.net"
        run("gen", "grid", "--k", 3, "-o", g)
        store = tmp_path / "g3.tcs"
        assert run("tc", "build", g, "-o", store) == 0
        net, _ = load_network(g)
        bp = enumerate_bipartitions(net.k)[0]
        expected = min_separating_cut(net, bp).value
        capsys.readouterr()
        assert run("tc", "query", store, "--set", "q2") == 0
        printed = capsys.readouterr().out.strip()
        assert printed == f"{expected.numerator}/{expected.denominator}"

    def test_query_complement_same(self, tmp_path, capsys):
        e = tmp_path / "e.net"
        e.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 7/1\n")
        store = tmp_path / "e.tcs"
        run("tc", "build", e, "-o", store)
        capsys.readouterr()
        assert run("tc", "query", store, "--set", "q2") == 0
        first = capsys.readouterr().out
        assert run("tc", "query", store, "--set", "q1") == 0
        assert capsys.readouterr().out == first == "7/1\n"

    def test_trivial_query_usage_error(self, tmp_path):
        e = tmp_path / "e.net"
        e.write_text("p mimick 2 1 2\nt 0 1\ne 0 1 7/1\n")
        store = tmp_path / "e.tcs"
        run("tc", "build", e, "-o", store)
        assert run("tc", "query", store, "--set", "q1,q2") == 2
