import io
import json
import sys
from pathlib import Path

from cmtilt.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(args):
    buf, err = io.StringIO(), io.StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = buf, err
    try:
        rc = main(args)
    finally:
        sys.stdout, sys.stderr = old_out, old_err
    return rc, buf.getvalue(), err.getvalue()


def test_parse_error_exit_code():
    rc, _, err = run_cli(["analyze", "--field", "fp:101", "--f", "x^2 + z",
                          "--wx", "1", "--wy", "1"])
    assert rc == 2
    assert "input error" in err


def test_inhomogeneous_exit_code():
    rc, _, err = run_cli(["analyze", "--field", "q", "--f", "x^2+y",
                          "--wx", "1", "--wy", "1"])
    assert rc == 2


def test_bad_field_exit_code():
    rc, _, err = run_cli(["analyze", "--field", "fp:9", "--f", "x^2-y^2",
                          "--wx", "1", "--wy", "1"])
    assert rc == 2


def test_analyze_json_schema():
    rc, out, _ = run_cli(["analyze", "--field", "fp:101", "--f", "x^5-y^3",
                          "--wx", "3", "--wy", "5", "--json"])
    assert rc == 0
    data = json.loads(out)
    assert data["a_invariant"] == 7
    assert data["period"] == 1
    assert data["grothendieck_rank"] == 8
    assert data["tilting_algebra"]["vertex_count"] == 8
    assert data["negative_case"] is None
    expected_keys = {"version", "inputs", "a_invariant", "period", "components",
                     "grothendieck_rank", "squarefree", "progenerator_algebra",
                     "tilting_algebra", "negative_case", "checks", "notes", "ok"}
    assert set(data.keys()) == expected_keys


def test_analyze_golden_a3():
    rc, out, _ = run_cli(["analyze", "--field", "fp:101", "--f", "x^4-y^2",
                          "--wx", "1", "--wy", "2", "--json"])
    assert rc == 0
    data = json.loads(out)
    golden = json.loads((GOLDEN / "a3_analysis.json").read_text())
    assert data == golden


def test_catalog_filter():
    rc, out, _ = run_cli(["catalog", "--filter", "A3"])
    assert rc == 0
    assert "A3" in out and "PASS" in out


def test_catalog_unknown_filter():
    rc, _, err = run_cli(["catalog", "--filter", "nosuchentry"])
    assert rc == 2


def test_negative_command_json():
    rc, out, _ = run_cli(["negative", "--n", "3", "--json"])
    assert rc == 0
    data = json.loads(out)
    assert data["n"] == 3
    assert data["silting"] is True
    assert data["tilting"] is False
    assert data["hom_table"]["0"] == 1
    assert data["hom_table"]["-2"] == 1
    assert all(v == 0 for s, v in data["hom_table"].items() if s not in ("0", "-2"))


def test_negative_n1_tilting():
    rc, out, _ = run_cli(["negative", "--n", "1", "--json"])
    data = json.loads(out)
    assert data["tilting"] is True
    assert data["hom_table"]["0"] == 2


def test_analyze_skip_oracle():
    rc, out, _ = run_cli(["analyze", "--field", "fp:101", "--f", "x^4-y^2",
                          "--wx", "1", "--wy", "2", "--json", "--skip-oracle"])
    assert rc == 0
    data = json.loads(out)
    assert data["checks"]["oracle_entrywise"] == "skipped"


def test_max_window_too_small_is_reported():
    rc, _, err = run_cli(["analyze", "--field", "fp:101", "--f", "x^4-y^2",
                          "--wx", "1", "--wy", "2", "--max-window", "1"])
    assert rc == 2
    assert "failed" in err or "window" in err
