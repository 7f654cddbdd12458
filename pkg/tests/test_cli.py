import json

import jsonschema
import pytest

from pod2kit import catalog
from pod2kit.cli import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_shipped_manifest_matches_catalog():
    assert catalog.load_manifest(catalog.default_manifest_path()) == json.loads(json.dumps(catalog.default_manifest()))


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--limit", "10", "--format", "csv")
    assert code == EXIT_OK
    rows = out.strip().splitlines()
    assert rows[0] == "n,value"
    assert rows[1:] == ["0,1", "1,1", "2,0", "3,1", "4,2", "5,2", "6,1", "7,2", "8,4", "9,4"]


def test_compute_single_row_and_json(capsys):
    assert run(capsys, "compute", "--limit", "1")[1] == "n,value\n0,1\n"
    code, out, _ = run(capsys, "compute", "--limit", "3", "--format", "json")
    assert json.loads(out) == [{"n": 0, "value": "1"}, {"n": 1, "value": "1"}, {"n": 2, "value": "0"}]


def test_compute_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--limit", "0"])
    assert exc.value.code == EXIT_USAGE


def test_output_file_and_io_error(tmp_path, capsys):
    target = tmp_path / "t.csv"
    assert run(capsys, "compute", "--limit", "5", "--output", str(target))[0] == EXIT_OK
    assert target.read_text().startswith("n,value\n0,1\n")
    assert run(capsys, "compute", "--limit", "5", "--output", str(tmp_path / "no" / "x.csv"))[0] == EXIT_IO


def test_tau_and_dissect(capsys):
    code, out, _ = run(capsys, "tau", "--limit", "4")
    assert out.splitlines() == ["n,value", "1,1", "2,-24", "3,252"]
    code, out, _ = run(capsys, "dissect", "--modulus", "3", "--residue", "2", "--limit", "4")
    assert out.splitlines() == ["n,value", "0,0", "1,2", "2,4", "3,4"]
    assert run(capsys, "dissect", "--modulus", "3", "--residue", "3")[0] == EXIT_USAGE


def test_verify_pass_and_fail_exit_codes(capsys):
    assert run(capsys, "verify", "--claim", "theorem1.i", "--order", "500")[0] == EXIT_OK
    assert run(capsys, "verify", "--claim", "theorem4", "--p", "7", "--n", "40")[0] == EXIT_OK
    assert run(capsys, "verify", "--claim", "lemma2.1-negative-control")[0] == EXIT_FAILED


def test_verify_unknown_claim_lists_names(capsys):
    code, _, err = run(capsys, "verify", "--claim", "no-such-claim")
    assert code == EXIT_USAGE
    assert "theorem4" in err


def test_verify_bad_parameters_are_usage_errors(capsys):
    assert run(capsys, "verify", "--claim", "theorem4", "--p", "5")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--claim", "lemma2.1", "--p", "5")[0] == EXIT_USAGE


def test_verify_by_family_name_with_parameters(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "theorem3.i", "--p", "7", "--s", "17",
                       "--n", "100", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, catalog.REPORT_SCHEMA)
    assert doc["claims"][0]["range"] == 100


def test_report_all_json_schema_and_determinism(capsys):
    code, out, _ = run(capsys, "report-all", "--order", "50", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, catalog.REPORT_SCHEMA)
    again = json.loads(run(capsys, "report-all", "--order", "50", "--format", "json")[1])
    strip = lambda d: [{k: v for k, v in c.items() if k != "elapsed_ms"} for c in d["claims"]]
    assert strip(doc) == strip(again)
    assert [c["name"] for c in doc["claims"]] == [e["name"] for e in catalog.default_manifest()]
    for c in doc["claims"]:
        assert c["status"] == c["expect"], c["name"]


def test_report_all_missing_manifest(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv(catalog.MANIFEST_ENV, str(tmp_path / "missing.json"))
    assert run(capsys, "report-all")[0] == EXIT_IO
    assert run(capsys, "report-all", "--manifest", str(tmp_path / "gone.json"))[0] == EXIT_IO


def test_report_all_malformed_manifest(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"not": "a list"}')
    assert run(capsys, "report-all", "--manifest", str(bad))[0] == EXIT_IO
    bad.write_text("[{")
    assert run(capsys, "report-all", "--manifest", str(bad))[0] == EXIT_IO


def test_custom_manifest_via_env(capsys, monkeypatch, tmp_path):
    entries = [
        {"name": "f1-squared", "lhs": {"eta": [[1, 2]]}, "rhs": {"eta": [[2, 1]]}, "modulus": 2, "order": 80},
        {"name": "f1-vs-f2", "lhs": {"eta": [[1, 1]]}, "rhs": {"eta": [[2, 1]]}, "modulus": 2, "order": 80,
         "expect": "fail"},
    ]
    path = tmp_path / "m.json"
    path.write_text(json.dumps(entries))
    monkeypatch.setenv(catalog.MANIFEST_ENV, str(path))
    code, out, _ = run(capsys, "report-all", "--format", "json")
    assert code == EXIT_OK
    assert [c["status"] for c in json.loads(out)["claims"]] == ["pass", "fail"]
    # a control that unexpectedly passes makes the whole run fail
    entries[1]["expect"] = "pass"
    path.write_text(json.dumps(entries))
    assert run(capsys, "report-all")[0] == EXIT_FAILED


def test_counterexamples_are_decimal_strings():
    entry = next(e for e in catalog.default_manifest() if e["name"] == "lemma2.1-negative-control")
    row = catalog.run_entry(entry).to_dict()
    n, lhs, rhs = row["counterexamples"][0]
    assert isinstance(n, int) and isinstance(lhs, str) and isinstance(rhs, str)
