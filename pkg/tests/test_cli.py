import json
import os
import subprocess
import sys

import pytest

from supergraph import FormatError, dihedral, write_cayley_file
from supergraph.cli import GroupSpec, main, parse_group_spec


@pytest.fixture
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_parse_group_spec():
    assert parse_group_spec("D:3") == GroupSpec("D", (3,))
    assert parse_group_spec("PQ:7,3") == GroupSpec("PQ", (7, 3))
    assert parse_group_spec("cayley:some/table.txt") == GroupSpec(
        "cayley", path="some/table.txt"
    )
    with pytest.raises(FormatError, match="position"):
        parse_group_spec("D:x")
    with pytest.raises(FormatError):
        parse_group_spec("X:3")
    with pytest.raises(FormatError):
        parse_group_spec("D3")
    with pytest.raises(FormatError):
        parse_group_spec("PQ:7")


def test_graph_command_json(in_tmp, capsys):
    assert main(["graph", "--group", "D:3", "--relation", "order", "--out", "json"]) == 0
    out = capsys.readouterr().out
    assert "6 vertices, 9 edges" in out
    assert "K_{1,2}[K_1, K_2, K_3]" in out
    assert "block sizes (1, 2, 3)" in out
    data = json.loads((in_tmp / "D3-order.json").read_text())
    assert data["n"] == 6
    assert len(data["edges"]) == 9
    assert data["labels"][0] == "e"


def test_graph_command_complete_even_case(in_tmp, capsys):
    assert main(["graph", "--group", "D:4", "--relation", "order"]) == 0
    assert "K_8" in capsys.readouterr().out


def test_graph_command_dot(in_tmp, capsys):
    assert main(["graph", "--group", "Q:2", "--relation", "conjugacy",
                 "--out", "dot", "--output", "q8.dot"]) == 0
    out = capsys.readouterr().out
    assert "block sizes (2, 2, 2, 2)" in out
    text = (in_tmp / "q8.dot").read_text()
    assert text.startswith("graph G {")
    assert '0 [label="e"];' in text


def test_graph_command_relation_file(in_tmp, capsys):
    (in_tmp / "part.json").write_text(
        json.dumps({"n": 6, "blocks": [[0], [1, 2], [3, 4, 5]]})
    )
    assert main(["graph", "--group", "D:3", "--relation", "file:part.json"]) == 0
    assert "9 edges" in capsys.readouterr().out


def test_graph_command_cayley_group(in_tmp, capsys):
    write_cayley_file(dihedral(3), in_tmp / "d6.txt")
    assert main(["graph", "--group", "cayley:d6.txt", "--relation", "conjugacy"]) == 0
    assert "6 vertices" in capsys.readouterr().out


def test_spectrum_closed_laplacian_csv(in_tmp, capsys):
    assert main([
        "spectrum", "--group", "D:3", "--relation", "order", "--matrix",
        "laplacian", "--method", "closed", "--out", "csv",
    ]) == 0
    text = (in_tmp / "D3-order-laplacian-closed.csv").read_text()
    assert text == "value,multiplicity\n0,1\n1,1\n3,1\n4,2\n6,1\n"


def test_spectrum_quotient_poly_json(in_tmp, capsys):
    assert main([
        "spectrum", "--group", "D:3", "--relation", "order", "--matrix",
        "laplacian", "--method", "quotient", "--output", "p.json",
    ]) == 0
    coeffs = [int(c) for c in json.loads((in_tmp / "p.json").read_text())["coeffs"]]
    # x(x-6)(x-1)(x-4)^2(x-3)
    from supergraph import PolynomialZ

    assert PolynomialZ(coeffs) == PolynomialZ.from_roots(
        [(0, 1), (6, 1), (1, 1), (4, 2), (3, 1)]
    )


def test_spectrum_closed_pq(in_tmp, capsys):
    assert main([
        "spectrum", "--group", "PQ:7,3", "--relation", "order", "--matrix",
        "laplacian", "--method", "closed", "--out", "csv", "--output", "pq.csv",
    ]) == 0
    body = (in_tmp / "pq.csv").read_text().splitlines()
    assert body[1:] == ["0,1", "1,1", "7,5", "15,13", "21,1"]


def test_spectrum_compare_agrees(in_tmp, capsys):
    code = main([
        "spectrum", "--group", "Q:3", "--relation", "order", "--matrix",
        "adjacency", "--method", "jacobi", "--compare",
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "DISAGREE" not in out
    assert "compare:" in out


def test_spectrum_closed_unsupported(in_tmp, capsys):
    code = main([
        "spectrum", "--group", "Q:2", "--relation", "conjugacy", "--matrix",
        "adjacency", "--method", "closed",
    ])
    assert code == 1
    assert "no closed form" in capsys.readouterr().err


def test_spectrum_multiplicities_sum_to_vertex_count(in_tmp):
    for group, order in (("D:4", 8), ("Q:3", 12), ("PQ:5,2", 10)):
        assert main([
            "spectrum", "--group", group, "--relation", "conjugacy", "--matrix",
            "laplacian", "--method", "jacobi", "--output", "s.json",
        ]) == 0
        data = json.loads((in_tmp / "s.json").read_text())
        assert sum(e["multiplicity"] for e in data["eigenvalues"]) == order


def test_spectrum_outputs_byte_identical(in_tmp):
    args = [
        "spectrum", "--group", "D:5", "--relation", "order", "--matrix",
        "laplacian", "--method", "jacobi",
    ]
    assert main(args + ["--output", "a.json"]) == 0
    assert main(args + ["--output", "b.json"]) == 0
    assert (in_tmp / "a.json").read_bytes() == (in_tmp / "b.json").read_bytes()


def test_verify_cli_green_suite(in_tmp, capsys):
    code = main(["verify", "--suite", "4.5", "--report", "r.json", "--jobs", "1"])
    assert code == 0
    data = json.loads((in_tmp / "r.json").read_text())
    assert data["summary"] == {"match": 5, "mismatch": 0, "paper_table": 0}
    for entry in data["reports"]:
        assert set(entry) == {"claim", "params", "verdict", "diff", "ms"}


def test_verify_cli_strict_flips_exit_code(in_tmp):
    base = ["verify", "--suite", "4.4", "--n", "2..4", "--jobs", "1"]
    assert main(base + ["--report", "r1.json"]) == 0
    assert main(base + ["--strict", "--report", "r2.json"]) == 2


def test_verify_cli_deterministic_modulo_ms(in_tmp):
    args = ["verify", "--suite", "generic", "--trials", "25", "--seed", "42", "--jobs", "1"]
    assert main(args + ["--report", "r1.json"]) == 0
    assert main(args + ["--report", "r2.json"]) == 0

    def strip(path):
        data = json.loads((in_tmp / path).read_text())
        for entry in data["reports"]:
            entry.pop("ms")
        return data

    assert strip("r1.json") == strip("r2.json")


def test_verify_cli_jobs_env(in_tmp, monkeypatch):
    monkeypatch.setenv("SUPERGRAPH_JOBS", "2")
    assert main(["verify", "--suite", "4.5", "--report", "r.json"]) == 0


def test_usage_error_exit_code():
    assert main(["graph"]) == 1  # missing required --group
    assert main(["verify", "--suite", "nope"]) == 1


def test_group_error_reported(in_tmp, capsys):
    assert main(["graph", "--group", "D:2"]) == 1
    assert "error" in capsys.readouterr().err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supergraph.cli", "verify", "--suite", "4.5",
         "--report", os.devnull],
        capture_output=True, text=True, timeout=300,
    )
    assert proc.returncode == 0
    assert "summary: 5 Match" in proc.stdout
