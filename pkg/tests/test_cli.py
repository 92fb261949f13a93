import json

import pytest

from outbreak_dss.cli import UsageError, main, resolve_port
from outbreak_dss.scenarios import emit_report, run_scenario, scenario_by_id


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_risk_reproduces_worked_example(capsys):
    code, out, err = run(capsys, "risk", "--fpr", "0.01", "--fnr", "0.20")
    assert code == 0
    assert out == "risk_p=3.2000 risk_n=1.0100\n"
    assert err == ""


def test_risk_accepts_custom_impacts(capsys):
    code, out, _ = run(capsys, "risk", "--fpr", "0", "--fnr", "0",
                       "--impacts", "1,1,1,1")
    assert code == 0
    assert out == "risk_p=1.0000 risk_n=1.0000\n"


def test_malformed_impacts_are_a_usage_error(capsys):
    code, _, err = run(capsys, "risk", "--fpr", "0", "--fnr", "0",
                       "--impacts", "1,2,3")
    assert code == 2
    assert "usage error" in err


def test_infer_prints_percent_and_probability_columns(capsys):
    code, out, err = run(capsys, "infer", "--evidence", "Symptoms=>8",
                         "--target", "HasCovid")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "HasCovid"
    assert len(lines) == 3
    yes_line = next(line for line in lines if line.strip().startswith("Yes"))
    assert "72.18%" in yes_line
    assert "0.7217" in yes_line


def test_infer_handles_multiple_targets(capsys):
    code, out, _ = run(capsys, "infer", "--target", "HasCovid",
                       "--target", "Vulnerable")
    assert code == 0
    assert out.splitlines()[0] == "HasCovid"
    assert "Vulnerable" in out.splitlines()


def test_infer_rejects_malformed_evidence(capsys):
    code, _, err = run(capsys, "infer", "--evidence", "Symptoms",
                       "--target", "HasCovid")
    assert code == 2
    assert "usage error" in err
    assert "Variable=State" in err


def test_infer_reports_unknown_state_as_domain_failure(capsys):
    code, _, err = run(capsys, "infer", "--evidence", "Symptoms=tons",
                       "--target", "HasCovid")
    assert code == 1
    assert err.startswith("EVIDENCE_UNKNOWN_STATE:")


def test_infer_requires_a_target(capsys):
    code, _, _ = run(capsys, "infer", "--evidence", "Symptoms=0")
    assert code == 2


def test_infer_output_is_deterministic(capsys):
    argv = ("infer", "--evidence", "Test=positive", "--target", "HasCovid")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_validate_accepts_the_bundled_model(capsys):
    from outbreak_dss.modelfile import bundled_model_path
    code, out, _ = run(capsys, "validate", str(bundled_model_path()))
    assert code == 0
    assert out == "OK: 15 variables, 15 tables\n"


def test_validate_rejects_a_cyclic_model(capsys, tmp_path):
    doc = {
        "variables": [{"name": "A", "states": ["x", "y"]},
                      {"name": "B", "states": ["x", "y"]}],
        "cpts": [
            {"child": "A", "parents": ["B"], "rows": [[0.5, 0.5], [0.5, 0.5]]},
            {"child": "B", "parents": ["A"], "rows": [[0.5, 0.5], [0.5, 0.5]]},
        ],
        "meta": {},
    }
    path = tmp_path / "cyclic.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1
    assert err.startswith("CYCLE_DETECTED:")


def test_validate_reports_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "absent.json"))
    assert code == 1
    assert err.startswith("MODEL_FILE_NOT_FOUND:")


def test_scenario_csv_matches_library_report(capsys, bundled):
    code, out, _ = run(capsys, "scenario", "--id", "3", "--format", "csv")
    assert code == 0
    assert out == emit_report(run_scenario(bundled.network, scenario_by_id(3)), "csv")


def test_scenario_table_is_default_format(capsys, bundled):
    code, out, _ = run(capsys, "scenario", "--id", "2")
    assert code == 0
    assert out == emit_report(run_scenario(bundled.network, scenario_by_id(2)), "table")


def test_scenario_rejects_unknown_id(capsys):
    code, _, _ = run(capsys, "scenario", "--id", "7")
    assert code == 2


def test_no_command_is_a_usage_error(capsys):
    assert run(capsys, )[0] == 2


def test_resolve_port_precedence():
    assert resolve_port(9000, env={"OUTBREAK_DSS_PORT": "7000"}) == 9000
    assert resolve_port(None, env={"OUTBREAK_DSS_PORT": "7000"}) == 7000
    assert resolve_port(None, env={}) == 8080
    with pytest.raises(UsageError):
        resolve_port(None, env={"OUTBREAK_DSS_PORT": "later"})
