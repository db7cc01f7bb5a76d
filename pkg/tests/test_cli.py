import json

import pytest

from wronskit.cli import SUITES, main
from wronskit.report import VerificationReport


def strip_timings(doc: dict) -> dict:
    for record in doc["records"]:
        record.pop("millis", None)
    doc["aggregate"].pop("duration", None)
    return doc


def run_to_json(tmp_path, name: str, argv: list) -> tuple[int, dict]:
    out = tmp_path / name
    code = main(argv + ["--output", str(out)])
    return code, json.loads(out.read_text())


def test_pascal_suite_counts_and_fields(tmp_path):
    code, doc = run_to_json(tmp_path, "pascal.json",
                            ["verify", "--suite", "pascal", "--max-n", "6"])
    assert code == 0
    records = doc["records"]
    assert len(records) == 5  # n = 2 .. 6
    assert doc["aggregate"] == {"total": 5, "passed": 5, "failed": 0,
                                "duration": doc["aggregate"]["duration"]}
    for record in records:
        assert record["suite"] == "pascal"
        assert record["check"] == "pascal-product"
        assert record["pass"] is True
        assert set(record) >= {"suite", "check", "params", "expected", "computed", "pass", "millis"}


def test_verify_is_deterministic(tmp_path):
    argv = ["verify", "--suite", "identities,determinants", "--max-n", "3"]
    code1, doc1 = run_to_json(tmp_path, "a.json", list(argv))
    code2, doc2 = run_to_json(tmp_path, "b.json", list(argv))
    assert code1 == code2 == 0
    assert strip_timings(doc1) == strip_timings(doc2)


def test_records_sorted_by_suite_check_params(tmp_path):
    _, doc = run_to_json(tmp_path, "sorted.json",
                         ["verify", "--suite", "all", "--max-n", "2"])
    keys = [(r["suite"], r["check"], json.dumps(r["params"], sort_keys=True))
            for r in doc["records"]]
    assert keys == sorted(keys)
    assert {r["suite"] for r in doc["records"]} == set(SUITES)


def test_jobs_do_not_change_the_report(tmp_path):
    base = ["verify", "--suite", "identities,pascal", "--max-n", "4"]
    _, serial = run_to_json(tmp_path, "serial.json", base + ["--jobs", "1"])
    _, threaded = run_to_json(tmp_path, "threaded.json", base + ["--jobs", "4"])
    assert strip_timings(serial) == strip_timings(threaded)


def test_markdown_format(capsys):
    code = main(["verify", "--suite", "pascal", "--max-n", "3", "--format", "markdown"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("# verification report")
    assert "## pascal" in out
    assert "| pascal-product |" in out
    assert "**total** 2, **passed** 2, **failed** 0" in out


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suites": ["pascal"], "max_n": 6}))
    code, doc = run_to_json(tmp_path, "cfg_run.json",
                            ["verify", "--config", str(cfg), "--max-n", "3"])
    assert code == 0
    assert doc["aggregate"]["total"] == 2  # flag max-n=3 overrides the file's 6


def test_config_unknown_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"suites": ["pascal"], "retries": 2}))
    assert main(["verify", "--config", str(cfg)]) == 2
    assert "unknown config key" in capsys.readouterr().err


def test_config_invalid_json_rejected(tmp_path, capsys):
    cfg = tmp_path / "broken.json"
    cfg.write_text("{not json")
    assert main(["verify", "--config", str(cfg)]) == 2
    assert "configuration error" in capsys.readouterr().err


def test_config_missing_file_rejected(tmp_path):
    assert main(["verify", "--config", str(tmp_path / "absent.json")]) == 2


def test_unknown_suite_rejected(capsys):
    assert main(["verify", "--suite", "nonsense"]) == 2
    assert "configuration error" in capsys.readouterr().err


def test_unwritable_output_rejected(tmp_path, capsys):
    target = tmp_path / "no_such_dir" / "report.json"
    code = main(["verify", "--suite", "pascal", "--max-n", "2", "--output", str(target)])
    assert code == 2
    assert "cannot write report" in capsys.readouterr().err


def test_exit_code_one_on_failure(tmp_path, monkeypatch):
    def failing(n, j):
        return VerificationReport(check="odd-binomial-sum", params={"n": n, "j": j},
                                  expected="1", computed="2", passed=False, millis=0.0)
    monkeypatch.setattr("wronskit.cli.check_odd_binomial_sum", failing)
    code, doc = run_to_json(tmp_path, "fail.json",
                            ["verify", "--suite", "identities", "--max-n", "2"])
    assert code == 1
    assert doc["aggregate"]["failed"] == 4


def test_matrix_json_document(capsys):
    code = main(["matrix", "--kind", "binom-odd", "--n", "2", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["rows"], doc["cols"]) == (3, 3)
    assert doc["entries"][:3] == ["1", "1", "1"]  # first row, flat row-major list
    assert doc["det_identity"]["check"] == "det-closed-form"
    assert doc["det_identity"]["pass"] is True
    assert doc["det_identity"]["expected"] == "8"


def test_matrix_pretty_with_identity_line(capsys):
    code = main(["matrix", "--kind", "binom-even", "--n", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "det-closed-form" in out and "pass" in out


def test_matrix_without_closed_form_prints_only_entries(capsys):
    code = main(["matrix", "--kind", "pascal", "--n", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "det-closed-form" not in out


def test_matrix_kind_parameter_errors(capsys):
    assert main(["matrix", "--kind", "row-shift", "--n", "3"]) == 2
    assert "configuration error" in capsys.readouterr().err  # k is required


def test_matrix_nodes_argument(capsys):
    code = main(["matrix", "--kind", "binom-nodes", "--nodes", "1,3/2,4", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["rows"] == 3
    assert doc["det_identity"]["pass"] is True


def test_wronskian_command(capsys):
    code = main(["wronskian", "--n", "1", "--kind", "sin"])
    out = capsys.readouterr().out
    assert code == 0
    assert "f = x^1 sin(x)" in out
    assert out.strip().endswith("16")


def test_wronskian_print_matrix(capsys):
    code = main(["wronskian", "--n", "0", "--count", "2", "--print-matrix"])
    out = capsys.readouterr().out
    assert code == 0
    assert "s" in out and "c" in out
    assert out.strip().endswith("-1")


def test_wronskian_rejects_negative(capsys):
    assert main(["wronskian", "--n", "-1"]) == 2


def test_identity_command(capsys):
    assert main(["identity", "--which", "odd", "--n", "3", "--j", "2"]) == 0
    line = capsys.readouterr().out
    assert "odd-binomial-sum" in line and "pass" in line
    assert main(["identity", "--which", "even", "--n", "2", "--j", "2"]) == 0


def test_identity_rejects_bad_parameters(capsys):
    assert main(["identity", "--which", "odd", "--n", "0", "--j", "1"]) == 2
    assert "configuration error" in capsys.readouterr().err


def test_module_entry_point():
    with pytest.raises(SystemExit) as exc:
        from wronskit.cli import run_main
        import sys
        old = sys.argv
        sys.argv = ["wronskit", "identity", "--which", "odd", "--n", "1", "--j", "1"]
        try:
            run_main()
        finally:
            sys.argv = old
    assert exc.value.code == 0
