"""End-to-end tests for the command-line interface."""

import contextlib
import io
import json

import pytest

from enriques_invariants.cli import FAIL, OK, USAGE, main


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def run_json(argv):
    code, out = run_cli(argv + ["--json"])
    return code, json.loads(out)


def test_exit_code_constants():
    assert (OK, FAIL, USAGE) == (0, 1, 2)


def test_analyze_known_component():
    code, rep = run_json(["analyze", "4E1+3E2"])
    assert code == OK
    assert rep["status"] == "ok"
    p = rep["payload"]
    assert p["g"] == 13 and p["phi"] == 3
    assert p["component"] == "E_{13,3}^{(II)}"
    assert p["fiber_dim_chi"] == 1
    assert p["fiber_dim_c"] == p["fiber_dim_chi"]


def test_analyze_phi2_component():
    code, rep = run_json(["analyze", "4E1+E{1,2}"])
    assert code == OK
    p = rep["payload"]
    assert (p["g"], p["phi"]) == (9, 2)
    assert p["component"] == "E_{9,2}^{(I)}"
    assert p["fiber_dim_chi"] == 0


def test_analyze_payload_schema():
    _, rep = run_json(["analyze", "2E1+2E2+E3"])
    assert set(rep["payload"]) == {
        "type",
        "class",
        "g",
        "phi",
        "component",
        "h1_k3",
        "split",
        "fiber_dim_chi",
        "fiber_dim_c",
        "extendability_cap",
    }
    assert set(rep["payload"]["h1_k3"]) == {"lower", "upper", "exact", "certificate"}


def test_analyze_rejects_distributive_sugar():
    code, out = run_cli(["analyze", "2(E1+E{1,2})"])
    assert code == USAGE
    assert "position" in out


def test_analyze_untabulated_is_inconclusive():
    code, rep = run_json(["analyze", "5E1+5E2"])
    assert code == FAIL
    assert rep["status"] == "inconclusive"
    assert rep["payload"]["component"] is None


def test_analyze_invalid_shape_fails():
    code, _ = run_cli(["analyze", "+".join(f"E{i}" for i in range(1, 10))])
    assert code == FAIL


def test_components_count():
    code, rep = run_json(["components", "--g", "13", "--phi", "4"])
    assert code == OK
    assert len(rep["payload"]) == 4


def test_components_uncovered_fails():
    code, _ = run_cli(["components", "--g", "26", "--phi", "5"])
    assert code == FAIL


def test_phi_of_fundamental_class():
    code, rep = run_json(["phi", "num[1,0,0,0,0,0,0,0,0,0]"])
    assert code == OK
    assert rep["payload"]["phi"] == 3
    assert rep["payload"]["witness"]


def test_coh_of_canonical():
    code, rep = run_json(["coh", "pic[0,0,0,0,0,0,0,0,0,0;1]"])
    assert code == OK
    p = rep["payload"]
    assert (p["h0"], p["h1"], p["h2"]) == (0, 0, 1)


def test_coh_k3_flag():
    code, rep = run_json(["coh", "--k3", "num[0,2,0,0,0,0,0,0,0,0]"])
    assert code == OK
    p = rep["payload"]
    assert (p["h0"], p["h1"], p["h2"]) == (3, 1, 0)
    assert p["cover"] == "k3"


def test_coh_bad_literal_is_usage_error():
    code, _ = run_cli(["coh", "pic[1,2]"])
    assert code == USAGE


def test_enumerate():
    code, rep = run_json(["enumerate", "num[0,1,1,0,0,0,0,0,0,0]", "--kmax", "1"])
    assert code == OK
    assert rep["payload"]["count"] == 2
    assert all(row["pairing"] == 1 for row in rep["payload"]["classes"])


@pytest.mark.parametrize("scope", ["bounds", "phi3plus", "phi2", "phi1", "triple"])
def test_verify_tables_scopes_pass(scope):
    code, out = run_cli(["verify-tables", "--scope", scope])
    assert code == OK
    assert "FAIL" not in out


def test_verify_tables_all():
    code, rep = run_json(["verify-tables", "--scope", "all"])
    assert code == OK
    assert rep["status"] == "ok"
    rows = rep["payload"]
    assert all(r["ok"] for r in rows)
    # bounds 10 + fiber/cap rows for every tabulated and generated family
    assert len(rows) >= 10 + 22 + 12 + 14 + 9
    assert all({"table", "row", "expected", "computed", "certificate"} <= set(r) for r in rows)


def test_verify_tables_text_has_row_lines():
    code, out = run_cli(["verify-tables", "--scope", "bounds"])
    assert code == OK
    assert out.count("PASS") >= 10


def test_unknown_subcommand_is_usage_error():
    code, _ = run_cli(["frobnicate"])
    assert code == USAGE


def test_bad_scope_is_usage_error():
    code, _ = run_cli(["verify-tables", "--scope", "nonsense"])
    assert code == USAGE


def test_json_round_trip_stability():
    _, first = run_json(["analyze", "4E1+3E2"])
    _, second = run_json(["analyze", "4E1+3E2"])
    assert first == second
