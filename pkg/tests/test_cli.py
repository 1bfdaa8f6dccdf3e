"""Command-line interface: verbs, JSON contracts, determinism, and exit
codes."""

from __future__ import annotations

import json

import pytest

from higgs_atlas import bundle_from_dict, check_polystability, cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_build_emits_a_loadable_document(capsys):
    code, doc = run_json(capsys, "build", "--group", "so0:2,3", "--genus", "2",
                         "--d", "2", "--maximal")
    assert code == 0
    assert doc["schema"] == "higgs-atlas/1"
    h = bundle_from_dict(doc)
    assert h.genus == 2
    assert check_polystability(h).status == "stable"


def test_build_output_is_byte_deterministic(capsys):
    _, first = run(capsys, "build", "--group", "sp:6", "--genus", "2",
                   "--classes", "1000,0110")
    _, second = run(capsys, "build", "--group", "sp:6", "--genus", "2",
                    "--classes", "1000,0110")
    assert first == second


def test_build_rejects_missing_spin_choice(capsys):
    code, doc = run_json(capsys, "build", "--group", "sl:4", "--genus", "2",
                         "--spin-name", "")
    assert code == 1
    assert doc["status"] == "error"
    assert doc["code"] == "missing-spin"


def test_stability_round_trip(tmp_path, capsys):
    code, doc = run_json(capsys, "build", "--group", "so:1,2", "--genus", "2", "--d", "0",
                         "--mu", "--no-nu")
    assert code == 0
    path = tmp_path / "object.json"
    path.write_text(json.dumps(doc))
    code, verdict = run_json(capsys, "stability", "--input", str(path))
    assert code == 0
    assert verdict["status"] == "unstable"
    assert verdict["bound"] == 2


def test_limit_search_lists_three_branches(tmp_path, capsys):
    _, doc = run_json(capsys, "build", "--group", "so:1,2", "--genus", "2", "--d", "0")
    path = tmp_path / "object.json"
    path.write_text(json.dumps(doc))
    code, res = run_json(capsys, "limit", "--input", str(path), "--search", "1")
    assert code == 0
    assert res["count"] == 3


def test_limit_explicit_weights(tmp_path, capsys):
    _, doc = run_json(capsys, "build", "--group", "so:1,2", "--genus", "2", "--d", "0")
    path = tmp_path / "object.json"
    path.write_text(json.dumps(doc))
    code, res = run_json(capsys, "limit", "--input", str(path),
                         "--weights", "0,1,-1", "--with-stability")
    assert code == 0
    assert res["exists"] is True
    assert res["limit_stability"]["status"] == "unstable"


def test_limit_incompatible_weights_is_a_precondition_error(tmp_path, capsys):
    _, doc = run_json(capsys, "build", "--group", "so:1,2", "--genus", "2", "--d", "0")
    path = tmp_path / "object.json"
    path.write_text(json.dumps(doc))
    code, res = run_json(capsys, "limit", "--input", str(path), "--weights", "1,0,0")
    assert code == 1
    assert res["code"] == "precondition"


def test_limit_destabilized_branch_parity(tmp_path, capsys):
    _, doc = run_json(capsys, "build", "--group", "so0:3,5", "--genus", "2",
                      "--d", "2", "--deformed")
    path = tmp_path / "object.json"
    path.write_text(json.dumps(doc))
    code, res = run_json(capsys, "limit", "--input", str(path), "--line-degree", "2")
    assert code == 0 and res["exists"] is True
    code, res = run_json(capsys, "limit", "--input", str(path), "--line-degree", "3")
    assert code == 1
    assert res["code"] == "parity-violation"


def test_sw_of_class_list(capsys):
    code, doc = run_json(capsys, "sw", "--genus", "2", "--classes", "1000,0100")
    assert code == 0
    assert doc["sw1"] == "1100"
    assert doc["sw2"] == 1


def test_sw_surjectivity_and_minimal_table(capsys):
    code, doc = run_json(capsys, "sw", "--genus", "2", "--surjectivity", "--n", "2")
    assert code == 0
    assert doc["complete"] is False
    assert doc["missing"] == ["sw1=0000,sw2=1"]
    code, doc = run_json(capsys, "sw", "--genus", "2", "--minimal-n")
    assert code == 0
    assert doc["minimal"]["sw1=0000,sw2=1"] == 3
    assert doc["minimal"]["sw1=0001,sw2=1"] == 2


def test_census_verb(capsys):
    code, doc = run_json(capsys, "census", "--group", "sl:3", "--genus", "5")
    assert code == 0
    assert doc["total"] == 3
    code, out = run(capsys, "census", "--group", "so0:2,3", "--genus", "2",
                    "--sector", "maximal", "--table")
    assert code == 0
    assert "d=4" in out and "35" in out


def test_census_determinism(capsys):
    _, first = run(capsys, "census", "--group", "sp:6", "--genus", "2",
                   "--sector", "maximal")
    _, second = run(capsys, "census", "--group", "sp:6", "--genus", "2",
                    "--sector", "maximal")
    assert first == second


def test_param_verb_includes_reading(capsys):
    code, doc = run_json(capsys, "param", "--group", "so0:2,3", "--genus", "2",
                         "--d", "4")
    assert code == 0
    assert doc["parameterization"]["fiber_rank"] == 7
    assert doc["parameterization"]["base"] == "Sym^0"
    assert doc["parameterization"]["total"] == 10
    assert doc["extra_reading"]["readings_agree"] is True


def test_param_degree_zero_reports_retraction(capsys):
    code, doc = run_json(capsys, "param", "--group", "so:1,2", "--genus", "2",
                         "--d", "0")
    assert code == 1
    assert doc["code"] == "bound"
    assert doc["retraction"] == "Pic^0(X)/Z_2"


def test_dim_verb(capsys):
    code, doc = run_json(capsys, "dim", "--group", "so0:2,3", "--genus", "2")
    assert code == 0
    assert doc["real_dimension"] == 20
    assert doc["half_dimension"] == 10
    code, doc = run_json(capsys, "dim", "--group", "so0:2,3", "--genus", "2",
                         "--consistency", "--sector", "maximal")
    assert code == 0
    assert doc["consistency"]["consistent"] is True
    assert doc["consistency"]["mismatches"] == []
    assert doc["consistency"]["checked"] == 35


def test_verify_runs_all_checks(capsys):
    code, doc = run_json(capsys, "verify")
    assert code == 0
    assert doc["ok"] is True
    assert doc["failed"] == 0


def test_verify_only_subset(capsys):
    code, doc = run_json(capsys, "verify", "--only", "riemann-roch-chi")
    assert code == 0
    assert doc["passed"] == 1


def test_verify_unknown_check(capsys):
    code, doc = run_json(capsys, "verify", "--only", "no-such-check")
    assert code == 1
    assert doc["status"] == "error"


def test_budget_env_is_respected(tmp_path, capsys, monkeypatch):
    _, doc = run_json(capsys, "build", "--group", "so0:2,3", "--genus", "2",
                      "--d", "1", "--maximal")
    path = tmp_path / "object.json"
    path.write_text(json.dumps(doc))
    monkeypatch.setenv("HIGGS_ATLAS_BUDGET", "8")
    code, res = run_json(capsys, "stability", "--input", str(path))
    assert code == 1
    assert res["code"] == "budget"


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["census", "--group", "sl:3"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-verb"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_malformed_input_is_a_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, doc = run_json(capsys, "stability", "--input", str(bad))
    assert code == 1
    assert doc["code"] == "parse"
