"""Command-line interface tests (exit codes, formats, byte stability)."""

import json

import pytest

from mixedpf.cli import main
from mixedpf.graph import cycle_graph, format_fragment, parse_fragments
from mixedpf.models import circuit_neg_model, model_to_json

K3_TEXT = "vertices 3\nedge 0 1\nedge 1 2\nedge 2 0\n"
CIRCLE_TEXT = "vertices 0\ncircle\n"
FIG8_TEXT = "vertices 1\nedge 0 0\nedge 0 0\n"
FRAGMENTS_TEXT = (
    "vertices 2\nedge 0 1\nlabel 0\nlabel 1\n"
    "vertices 3\nedge 0 1\nedge 0 2\nlabel 1\nlabel 2\n"
)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_eval_matchings(tmp_path, capsys):
    path = write(tmp_path, "k3.graph", K3_TEXT)
    assert main(["eval", path, "--model", "matchings", "--mode", "ordinary"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "4"
    assert out[1].startswith("# subsets=")


def test_eval_circle_charpoly(tmp_path, capsys):
    path = write(tmp_path, "circle.graph", CIRCLE_TEXT)
    assert main(["eval", path, "--model", "charpoly?t=0", "--mode", "mixed"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "0"


def test_eval_fig8_circuit_pos(tmp_path, capsys):
    path = write(tmp_path, "fig8.graph", FIG8_TEXT)
    assert main(["eval", path, "--model", "circuit-pos?k=1", "--mode", "ordinary"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "3"


def test_eval_model_file(tmp_path, capsys):
    graph = write(tmp_path, "c2.graph", "vertices 2\nedge 0 1\nedge 0 1\n")
    model = write(tmp_path, "neg.json", json.dumps(model_to_json(circuit_neg_model(1))))
    assert main(["eval", graph, "--model-file", model, "--mode", "skew"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "-2"


def test_eval_requires_exactly_one_model_source(tmp_path, capsys):
    path = write(tmp_path, "k3.graph", K3_TEXT)
    assert main(["eval", path, "--mode", "ordinary"]) == 2
    assert "error:" in capsys.readouterr().err


def test_eval_missing_file_is_input_error(tmp_path, capsys):
    assert (
        main(["eval", str(tmp_path / "nope.graph"), "--model", "matchings", "--mode", "ordinary"])
        == 2
    )


def test_eval_parse_error_reports_line(tmp_path, capsys):
    path = write(tmp_path, "bad.graph", "vertices 1\nedge 0 7\n")
    assert main(["eval", path, "--model", "matchings", "--mode", "ordinary"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_eval_mode_mismatch_is_input_error(tmp_path, capsys):
    path = write(tmp_path, "k3.graph", K3_TEXT)
    assert main(["eval", path, "--model", "matchings", "--mode", "skew"]) == 2


def test_connrank(tmp_path, capsys):
    frags = write(tmp_path, "frags.graph", FRAGMENTS_TEXT)
    csv_path = tmp_path / "matrix.csv"
    code = main(
        [
            "connrank",
            frags,
            "--model",
            "charpoly?t=0",
            "--mode",
            "mixed",
            "--csv",
            str(csv_path),
        ]
    )
    assert code == 0
    out = capsys.readouterr().out.strip()
    assert out.endswith("PASS")
    assert "bound=16" in out
    rows = csv_path.read_text().strip().splitlines()
    assert len(rows) == 2 and len(rows[0].split(",")) == 2


def test_connrank_empty_file(tmp_path, capsys):
    frags = write(tmp_path, "empty.graph", "# nothing here\n")
    assert main(["connrank", frags, "--model", "matchings", "--mode", "ordinary"]) == 0
    assert capsys.readouterr().out.startswith("rank=0")


def test_connrank_t_mismatch(tmp_path, capsys):
    text = "vertices 2\nedge 0 1\nlabel 0\n" + FRAGMENTS_TEXT
    frags = write(tmp_path, "frags.graph", text)
    assert main(["connrank", frags, "--model", "matchings", "--mode", "ordinary"]) == 2


def test_verify_small_suite(capsys):
    assert main(["verify", "dglrs", "--k", "1", "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "PASS dglrs-k1 sum=16" in out
    assert "summary 1 cases, 0 failed" in out
    assert "time" not in out


def test_verify_unknown_suite():
    assert main(["verify", "bogus"]) == 2


def test_verify_report_byte_stable(capsys):
    assert main(["verify", "signs", "--max-m", "2", "--no-timing"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "signs", "--max-m", "2", "--no-timing"]) == 0
    assert capsys.readouterr().out == first


def test_gen_fragments_roundtrip(capsys):
    assert main(["gen-fragments", "--t", "2", "--max-internal", "1", "--max-edges", "2", "--limit", "12"]) == 0
    out = capsys.readouterr().out
    frags = parse_fragments(out)
    assert 0 < len(frags) <= 12
    assert all(f.t == 2 for f in frags)


def test_verify_charpoly_tiny(capsys):
    code = main(
        ["verify", "charpoly", "--max-vertices", "2", "--max-edges", "3", "--no-timing"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].startswith("summary")
