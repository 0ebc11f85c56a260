"""End-to-end CLI behavior, including the exit-code contract."""

import io
import json
import sys

import pytest

from tait.catalog import cube, dodecahedron, petersen, theta
from tait.cli import (
    EXIT_INVALID,
    EXIT_IRREDUCIBLE,
    EXIT_NOT_BIPARTITE,
    EXIT_OK,
    main,
)
from tait.planar import parse_map, serialize_map


def run(argv, capsys, monkeypatch=None, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def graph_file(tmp_path, cmap, name="g.txt"):
    path = tmp_path / name
    path.write_text(serialize_map(cmap))
    return str(path)


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_INVALID, EXIT_IRREDUCIBLE, EXIT_NOT_BIPARTITE) == (0, 1, 2, 3)


def test_count_from_file(tmp_path, capsys):
    code, out, _ = run(["count", graph_file(tmp_path, theta())], capsys)
    assert (code, out) == (EXIT_OK, "6\n")


def test_count_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["count"], capsys, monkeypatch, stdin=serialize_map(cube()))
    assert (code, out) == (EXIT_OK, "24\n")


def test_count_accepts_nonplanar(tmp_path, capsys):
    code, out, _ = run(["count", graph_file(tmp_path, petersen())], capsys)
    assert (code, out) == (EXIT_OK, "0\n")


def test_euler(tmp_path, capsys):
    code, out, _ = run(["euler", graph_file(tmp_path, cube())], capsys)
    assert (code, out) == (EXIT_OK, "24\n")


def test_euler_trace(tmp_path, capsys):
    code, out, _ = run(["euler", "--trace", graph_file(tmp_path, theta())], capsys)
    assert code == EXIT_OK
    assert out.splitlines() == [
        "0 bigon 0,5 2",
        "  1 loop - 3",
        "    2 empty 1",
        "6",
    ]


def test_euler_rejects_nonplanar(tmp_path, capsys):
    code, _, err = run(["euler", graph_file(tmp_path, petersen())], capsys)
    assert code == EXIT_INVALID
    assert "not planar" in err


def test_euler_irreducible_exits_2_with_graph(tmp_path, capsys):
    code, _, err = run(["euler", graph_file(tmp_path, dodecahedron())], capsys)
    assert code == EXIT_IRREDUCIBLE
    assert "irreducible" in err
    # the stuck graph rides along on stderr in map format
    stuck = "\n".join(
        line for line in err.splitlines() if not line.startswith("tait:")
    )
    assert parse_map(stuck, check_planar=False) == dodecahedron()


def test_p3_polynomial(tmp_path, capsys):
    code, out, _ = run(["p3", graph_file(tmp_path, theta())], capsys)
    assert (code, out) == (EXIT_OK, "q^3 + 2*q + 2*q^-1 + q^-3\n")


def test_p3_evaluated(tmp_path, capsys):
    path = graph_file(tmp_path, theta())
    assert run(["p3", path, "--at", "1"], capsys)[:2] == (EXIT_OK, "6\n")
    assert run(["p3", path, "--at", "1/2"], capsys)[:2] == (EXIT_OK, "105/8\n")


def test_p3_at_zero_is_an_error(tmp_path, capsys):
    code, _, err = run(["p3", graph_file(tmp_path, theta()), "--at", "0"], capsys)
    assert code == EXIT_INVALID
    assert "q = 0" in err


def test_p3_bad_rational(tmp_path, capsys):
    code, _, err = run(["p3", graph_file(tmp_path, theta()), "--at", "pi"], capsys)
    assert code == EXIT_INVALID


def test_p3_nonbipartite_exits_3(tmp_path, capsys):
    from tait.catalog import k4

    code, _, err = run(["p3", graph_file(tmp_path, k4())], capsys)
    assert code == EXIT_NOT_BIPARTITE
    assert "not bipartite" in err


def test_reduce(tmp_path, capsys):
    code, out, _ = run(["reduce", graph_file(tmp_path, theta())], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[0] == "0 bigon 0,5 2"
    assert out.splitlines()[-1] == "value 6"


def test_gen_writes_map_text(capsys):
    code, out, _ = run(["gen", "theta"], capsys)
    assert (code, out) == (EXIT_OK, serialize_map(theta()))
    assert run(["gen", "circle"], capsys)[:2] == (EXIT_OK, "loops 1\n")


def test_gen_pipes_back_in(capsys, monkeypatch):
    _, text, _ = run(["gen", "prism", "6"], capsys)
    code, out, _ = run(["count"], capsys, monkeypatch, stdin=text)
    assert (code, out) == (EXIT_OK, "72\n")


def test_gen_prism_needs_size(capsys):
    code, _, err = run(["gen", "prism"], capsys)
    assert code == EXIT_INVALID
    assert "ring size" in err
    code, _, err = run(["gen", "prism", "1"], capsys)
    assert code == EXIT_INVALID


def test_gen_other_families_reject_size(capsys):
    code, _, err = run(["gen", "theta", "3"], capsys)
    assert code == EXIT_INVALID
    assert "no size" in err


def test_gen_unknown_family(capsys):
    assert run(["gen", "necklace"], capsys)[0] == EXIT_INVALID
    assert run(["gen", "moebius"], capsys)[0] == EXIT_INVALID


def test_usage_errors(capsys):
    assert run([], capsys)[0] == EXIT_INVALID
    assert run(["frobnicate"], capsys)[0] == EXIT_INVALID


def test_bad_input_text(capsys, monkeypatch):
    code, _, err = run(["count"], capsys, monkeypatch, stdin="vertex 0: 0 1\n")
    assert code == EXIT_INVALID
    assert "error" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(["count", str(tmp_path / "absent.txt")], capsys)
    assert code == EXIT_INVALID


def test_verify_text_report(capsys):
    code, out, _ = run(["verify", "conservation"], capsys)
    assert code == EXIT_OK
    assert "suite: conservation" in out
    assert "result: PASS" in out


def test_verify_json_report(capsys):
    code, out, _ = run(
        ["verify", "lemma5", "--trials", "40", "--seed", "5", "--json"], capsys
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["suite"] == "lemma5"
    assert report["passed"] is True
    assert report["trials"] == 40
    assert report["failures"] == 0
    assert report["max_deviation"] <= 1e-9


def test_verify_unknown_suite(capsys):
    assert run(["verify", "perpetual-motion"], capsys)[0] == EXIT_INVALID
