from __future__ import annotations

import json

from tricrit.cli import main
from tricrit.fixtures import fixture_path


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_fan5(capsys):
    code, out, _ = run_cli(capsys, "check", "fan5")
    assert code == 0
    payload = json.loads(out)
    assert payload["tricritical"] is True
    assert payload["unique_partition"] == [[0], [1, 3], [2, 4]]


def test_check_oct(capsys):
    code, out, _ = run_cli(capsys, "check", "oct")
    assert code == 0
    payload = json.loads(out)
    assert payload["uniquely_3"] is True and payload["tricritical"] is False


def test_check_from_file(capsys):
    code, out, _ = run_cli(capsys, "check", str(fixture_path("diamond")))
    assert code == 0 and json.loads(out)["tricritical"] is True


def test_check_stdin_graph6(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    code, out, _ = run_cli(capsys, "check", "-", "--format", "graph6")
    assert code == 0 and json.loads(out)["n"] == 3


def test_text_output_matches_json_content(capsys):
    code, text_out, _ = run_cli(capsys, "check", "k3", "--output", "text")
    code2, json_out, _ = run_cli(capsys, "check", "k3", "--output", "json")
    payload = json.loads(json_out)
    for key in ("graph6", "n", "m", "tricritical"):
        assert f"{key}: {payload[key]}" in text_out


def test_bound_not_planar_exit2(capsys):
    code, _, err = run_cli(capsys, "bound", "k5")
    assert code == 2 and "planar" in err


def test_bound_fan6(capsys):
    code, out, _ = run_cli(capsys, "bound", "fan6")
    assert code == 0
    payload = json.loads(out)
    assert payload["q"] == 3 and payload["size_bound_margin"] == 0


def test_audit_strict_gate(capsys):
    code, _, err = run_cli(capsys, "audit", "fan5")
    assert code == 2 and "separating" in err
    code, _, err = run_cli(capsys, "audit", "oct")
    assert code == 2
    code, out, _ = run_cli(capsys, "audit", "diamond")
    assert code == 0
    payload = json.loads(out)
    assert all(
        c.get("status") in ("pass", "skipped") for c in payload["checks"].values()
    )


def test_audit_relaxed(capsys):
    code, out, _ = run_cli(capsys, "audit", "fan5", "--relaxed")
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"]["separating_sides"]["status"] == "pass"


def test_decompose(capsys):
    code, out, _ = run_cli(capsys, "decompose", "bowtie")
    assert code == 0
    payload = json.loads(out)
    assert payload["decomposition"]["k"] == 2
    assert payload["aux_graph"]["edges"] == [[0, 1, "shared_vertex"]]
    code, _, err = run_cli(capsys, "decompose", "fan5")
    assert code == 2  # strict refuses separating 3-cycles
    code, out, _ = run_cli(capsys, "decompose", "fan5", "--relaxed")
    assert code == 0


def test_search_small(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["complete"] is True
    assert len(payload["hits"]) == 1  # the diamond


def test_search_hunt(capsys):
    code, out, _ = run_cli(capsys, "search", "--n", "6", "--hunt-m", "9", "--strategy", "augmentation")
    assert code == 0
    payload = json.loads(out)
    assert payload["complete"] and len(payload["hits"]) == 6


def test_size_table_text(capsys):
    code, out, _ = run_cli(capsys, "size-table", "--max-n", "5", "--output", "text")
    assert code == 0
    assert "5n/2-6" in out and " 7 " in out


def test_size_table_json(capsys):
    code, out, _ = run_cli(capsys, "size-table", "--max-n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"]["4"]["size"] == 5


def test_bad_inputs(capsys, tmp_path):
    code, _, err = run_cli(capsys, "check", "nosuchfixture")
    assert code == 2
    bad = tmp_path / "bad.el"
    bad.write_text("0 1 2\n")
    code, _, err = run_cli(capsys, "check", str(bad))
    assert code == 2
    code, _, err = run_cli(capsys, "search", "--n", "6", "--hunt-m", "10")
    assert code == 2
