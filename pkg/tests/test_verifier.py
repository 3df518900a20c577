import json

import pytest

from cremonaq.verifier import REGISTRY, SUITES, TABLE, Check, main, render_report, run_suite, to_dict
from cremonaq.verifier import checks as checks_mod
from cremonaq.verifier.report import VerificationReport, render_markdown


def strip_timing(d: dict) -> dict:
    return {**d, "checks": [{k: v for k, v in c.items() if k != "runtime_ms"} for c in d["checks"]]}


@pytest.fixture(scope="module")
def full_report():
    return run_suite("all", seed=1)


def test_every_suite_has_checks():
    assert {c.suite for c in REGISTRY} == set(SUITES)
    assert len({c.id for c in REGISTRY}) == len(REGISTRY)


def test_full_run_has_no_failures(full_report):
    failures = [(c.id, c.expected, c.actual) for c in full_report.checks if c.status == "fail"]
    assert failures == []
    assert full_report.ok


def test_erratum_notes_are_the_documented_discrepancies(full_report):
    notes = sorted(c.id for c in full_report.checks if c.status == "erratum-note")
    assert notes == ["dp1.curves_distinct", "dp1.curves_first_bracket_F6", "dp1.curves_whole_F6",
                     "dp3.bound_constant", "dp5.quadruple_list"]


def test_summary_counts_match(full_report):
    s = full_report.summary()
    assert sum(s.values()) == len(full_report.checks)


def test_table_has_the_nine_rows(full_report):
    table = full_report.table()
    assert [r["order"] for r in table] == [144, 24, 288, 432, 120, 96, 120, 48, 12]
    assert all(r["status"] == "pass" for r in table)
    assert len(TABLE) == 9


def test_json_schema(full_report):
    d = json.loads(render_report(full_report, "json"))
    assert set(d) == {"suite", "seed", "checks", "table"}
    for c in d["checks"]:
        assert set(c) == {"id", "paper_ref", "expected", "actual", "status", "runtime_ms"}
        assert c["status"] in ("pass", "fail", "erratum-note")
    for r in d["table"]:
        assert set(r) == {"surface", "structure", "order", "status"}


def test_checks_are_sorted_by_id(full_report):
    ids = [c.id for c in full_report.checks]
    assert ids == sorted(ids)


def test_markdown_row(full_report):
    text = render_report(full_report, "md")
    assert "| dP6 | (Z/6Z)²⋊D₆ | 432 | pass |" in text
    assert text.startswith("| Surface | Structure | Order | Status |")


def test_empty_report_renders_header_only():
    text = render_markdown(VerificationReport("all", 1, []))
    assert text == "| Surface | Structure | Order | Status |\n|---|---|---|---|\n"


def test_unknown_format_and_suite():
    with pytest.raises(ValueError):
        render_report(VerificationReport("all", 1, []), "xml")
    with pytest.raises(KeyError):
        run_suite("nosuch")


def test_suite_examples():
    mink = {c.id: c for c in run_suite("minkowski").checks}
    assert mink["minkowski.M3"].actual == 48 and mink["minkowski.M3"].status == "pass"
    assert mink["minkowski.M4"].actual == 5760
    dp6 = {c.id: c for c in run_suite("dp6").checks}
    assert (dp6["dp6.order432"].expected, dp6["dp6.order432"].actual, dp6["dp6.order432"].status) == (432, 432, "pass")
    dp5 = {c.id: c for c in run_suite("dp5").checks}
    assert dp5["dp5.order120"].actual == 120


def test_same_seed_gives_identical_json():
    a = to_dict(run_suite("dp4", seed=7))
    b = to_dict(run_suite("dp4", seed=7))
    assert strip_timing(a) == strip_timing(b)


def test_failing_check_is_recorded_not_raised(monkeypatch):
    def boom(ctx):
        raise RuntimeError("broken")

    monkeypatch.setattr(checks_mod, "REGISTRY", [Check("minkowski.boom", "minkowski", "test", 1, boom)])
    report = run_suite("minkowski")
    (c,) = report.checks
    assert c.status == "fail"
    assert c.actual.startswith("error: RuntimeError")
    assert not report.ok


# -- command line -------------------------------------------------------------------------

def test_cli_exit_zero_and_markdown(capsys):
    assert main(["run", "--suite", "dp6", "--format", "md"]) == 0
    out = capsys.readouterr().out
    assert "| dP6 | (Z/6Z)²⋊D₆ | 432 | pass |" in out


def test_cli_json_is_deterministic(capsys):
    assert main(["run", "--suite", "dp4", "--format", "json", "--seed", "7"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert main(["run", "--suite", "dp4", "--format", "json", "--seed", "7"]) == 0
    second = json.loads(capsys.readouterr().out)
    assert strip_timing(first) == strip_timing(second)
    assert first["seed"] == 7


def test_cli_exit_one_on_failure(monkeypatch, capsys):
    monkeypatch.setattr(checks_mod, "REGISTRY", [Check("minkowski.wrong", "minkowski", "test", 49, lambda ctx: 48)])
    assert main(["run", "--suite", "minkowski", "--format", "json"]) == 1
    d = json.loads(capsys.readouterr().out)
    assert d["checks"][0]["status"] == "fail"


def test_cli_erratum_does_not_fail_the_run(monkeypatch, capsys):
    monkeypatch.setattr(checks_mod, "REGISTRY", [Check("minkowski.typo", "minkowski", "test", 49, lambda ctx: 48, True)])
    assert main(["run", "--suite", "minkowski"]) == 0
    assert "erratum-note" in capsys.readouterr().out


def test_cli_usage_errors(capsys):
    assert main(["run", "--suite", "nosuch"]) == 2
    assert main(["run", "--cap", "0"]) == 2
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert "usage" in capsys.readouterr().err


def test_cli_writes_to_file(tmp_path, capsys):
    out = tmp_path / "report.md"
    assert main(["run", "--suite", "minkowski", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text(encoding="utf-8").startswith("| Surface |")
