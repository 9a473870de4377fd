from __future__ import annotations

import json

import pytest

from embverify import cli
from embverify.catalog import ENTRIES, Catalog
from embverify.report import emit_report, render_json, render_text, text_line
from embverify.suite import CheckReport, SuiteConfig, exit_status, run_suite


def test_catalog_is_complete_and_tracks_usage():
    cat = Catalog()
    assert len(cat.names()) == len(ENTRIES)
    assert all(cat.ref(n) for n in cat.names())
    cat.get("split_base", 1)
    assert "split_base" not in cat.unused()
    with pytest.raises(KeyError):
        cat.get("missing")


@pytest.mark.parametrize("kw", [
    {"ell_range": (0, 1)}, {"ell_range": (3, 2)}, {"case": "both-ways"}, {"regime": "above"},
    {"max_degree": 5}, {"checks": ("not-a-check",)}, {"fields": ()},
])
def test_invalid_configs_rejected(kw):
    with pytest.raises(ValueError):
        SuiteConfig(**kw).validate()


def test_empty_selection():
    reports = run_suite(SuiteConfig(checks=()))
    assert reports == [] and exit_status(reports) == 0
    doc = json.loads(render_json(reports, SuiteConfig(checks=())))
    assert doc["checks"] == []


def test_tor_report_json_and_text():
    cfg = SuiteConfig(ell_range=(1, 1), checks=("koszul-tor",), fields=(cli.QQ,))
    reports = run_suite(cfg)
    assert [r.status for r in reports] == ["pass"]
    w = json.loads(render_json(reports, cfg))["checks"][0]["witness"]
    assert w["total_degree"] == 4 and w["ranks"] == {"0": 1}
    assert text_line(reports[0]) == "PASS  koszul-tor  ℓ=1 field=Q deg=4 rank=1 (class x*y)"


def test_reports_are_deterministic():
    cfg = SuiteConfig(ell_range=(1, 2), checks=("split-blowdown", "localization"))
    assert render_json(run_suite(cfg), cfg) == render_json(run_suite(cfg), cfg)


def test_json_keys_sorted():
    r = CheckReport("x", "ref", "pass", {"b": 1, "a": 2})
    out = render_json([r])
    assert out.index('"a"') < out.index('"b"')
    assert list(json.loads(out)) == ["checks", "config", "suite"]


def test_perturbation_hook_fails_with_witness():
    cfg = SuiteConfig(ell_range=(1, 1), checks=("split-blowdown",), perturb="split_blowup")
    reports = run_suite(cfg)
    assert reports and all(r.status == "fail" for r in reports)
    assert all(r.witness["remainder"] != "0" for r in reports)
    assert exit_status(reports) == 1


def test_fail_status_drives_exit():
    assert exit_status([CheckReport("a", "r", "pass", {}), CheckReport("b", "r", "skip", {})]) == 0
    assert exit_status([CheckReport("a", "r", "fail", {})]) == 1


def test_emit_to_file(tmp_path):
    path = tmp_path / "out.txt"
    emit_report([CheckReport("a", "r", "pass", {}, "detail")], "text", str(path))
    assert path.read_text() == "PASS  a  detail\n"
    assert render_text([]) == ""


def test_cli_text_run(capsys):
    code = cli.main(["--ell", "1..1", "--checks", "split-blowdown,kernel-intersection"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0].startswith("PASS  split-blowdown  ℓ=1 crit")
    assert len(out) == 3


def test_cli_rejects_bad_config(capsys):
    assert cli.main(["--ell", "2..1"]) == 2
    assert cli.main(["--field", "fp:6"]) == 2


def test_cli_json_out(tmp_path):
    out = tmp_path / "r.json"
    code = cli.main(["--ell", "1", "--checks", "divided-power", "--format", "json", "--out", str(out)])
    doc = json.loads(out.read_text())
    assert code == 0 and doc["suite"] == "embverify" and doc["checks"][0]["status"] == "pass"


def test_cli_descriptor(tmp_path, capsys):
    desc = {
        "generators": [{"name": n, "degree": d} for n, d in
                       [("a", 2), ("b", 2), ("e", 3), ("f", 3), ("g", 3), ("h", 4)]],
        "differential": {"e": "a^2", "f": "b^2", "h": "q*b*g"},
        "parameters": {"q": "1"},
        "max_degree": 9,
    }
    path = tmp_path / "d.json"
    path.write_text(json.dumps(desc))
    assert cli.main(["--descriptor", str(path)]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    assert [int(r.split()[-1]) for r in rows] == [1, 0, 2, 1, 1, 1, 1, 1, 1, 1]


def test_cli_descriptor_errors(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"generators": [{"name": "e", "degree": 3}], "differential": {"e": "e^2"}}))
    assert cli.main(["--descriptor", str(path)]) == 2
    path.write_text(json.dumps({"generators": [{"name": "e", "degree": 0}]}))
    assert cli.main(["--descriptor", str(path)]) == 2


def test_parse_ell():
    assert cli.parse_ell("1..3") == (1, 3)
    assert cli.parse_ell("2") == (2, 2)
