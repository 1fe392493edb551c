import json

import pytest

from pertinency.cli import ConfigError, emit_report, main, parse_config, run_experiment
from pertinency.cli import runner
from pertinency.cli.config import apply_overrides, parse_field_flag
from pertinency.cli.emit import parse_json_report
from pertinency.cli.repro import case_configs, case_ids, expected_reflection_number, totient_floor

ALL_TASKS = ["pertinency", "reflection", "molien", "trace", "hdet", "membership", "verify_lemma53"]


def config(n=2, **kw):
    data = {"ring": {"n": n, "q": "minus_one"}, "field": {"kind": "rational"},
            "group": {"kind": "cyclic_permutation"}, "smash": {"kind": "group"},
            "max_degree": 10, "tasks": ["pertinency"]}
    data.update(kw)
    return data


def test_minimal_config_parses():
    cfg = parse_config(json.dumps(config()))
    assert cfg.n == 2 and cfg.effective_max_degree() == 10
    assert cfg.field_policy == "modular_then_exact"


def test_default_max_degree():
    data = config(n=3)
    del data["max_degree"]
    assert parse_config(data).effective_max_degree() == 12


def test_prime_dividing_2n_rejected():
    with pytest.raises(ConfigError, match="divides"):
        parse_config(config(n=4, field={"kind": "prime", "p": 2}))


def test_dual_without_grading_rejected():
    with pytest.raises(ConfigError, match="grading"):
        parse_config(config(smash={"kind": "dual"}))


def test_dual_nonabelian_rejected():
    data = config(n=3, smash={"kind": "dual"}, grading=[0, 1, 0],
                  group={"kind": "explicit",
                         "generators": [{"perm": [1, 0, 2]}, {"perm": [0, 2, 1]}]})
    with pytest.raises(ConfigError, match="abelian"):
        parse_config(data)


def test_every_violation_reported():
    data = config(n=4, field={"kind": "prime", "p": 2}, smash={"kind": "dual"},
                  tasks=["bogus"], colour="red")
    with pytest.raises(ConfigError) as info:
        parse_config(data)
    assert len(info.value.errors) == 4


def test_incompatible_generator_rejected():
    data = config(ring={"n": 2, "q": [[1, 2], ["1/2", 1]]},
                  group={"kind": "explicit", "generators": [{"perm": [1, 0]}]})
    with pytest.raises(ConfigError, match="relations"):
        parse_config(data)


def test_fourier_suite_needs_skew_cyclic():
    with pytest.raises(ConfigError, match="verify_lemma53"):
        parse_config(config(ring={"n": 2, "q": "commutative"}, tasks=["verify_lemma53"]))


def test_bad_json():
    with pytest.raises(ConfigError, match="invalid JSON"):
        parse_config("{")


def test_field_flag():
    assert parse_field_flag("cyclotomic:4") == {"kind": "cyclotomic", "n": 4}
    assert parse_field_flag("prime:7") == {"kind": "prime", "p": 7}
    with pytest.raises(ConfigError):
        parse_field_flag("reals")
    cfg = apply_overrides(parse_config(config()), max_degree=6, field="prime:7")
    assert cfg.max_degree == 6 and cfg.field == {"kind": "prime", "p": 7}


def test_run_all_tasks_n2():
    report = run_experiment(parse_config(config(tasks=ALL_TASKS, field_policy="exact")))
    res = report["results"]
    assert all(r["status"] == "ok" for r in res.values())
    assert res["pertinency"]["result"]["pertinency"] == 2
    assert res["pertinency"]["result"]["classification"] == "certified_finite"
    assert res["reflection"]["result"]["group_reflection_number"] == 2
    assert res["hdet"]["result"]["all_one"]
    assert res["molien"]["result"]["agree"]
    assert res["verify_lemma53"]["result"]["all_pass"]
    assert set(report) == {"config", "results", "timings_ms", "version"}


def test_reflection_n6():
    report = run_experiment(parse_config(config(n=6, tasks=["reflection"])))
    r = report["results"]["reflection"]["result"]
    assert r["group_reflection_number"] == 4
    assert r["odd_cycle_agreement"]


def test_totient_annotation_n3():
    report = run_experiment(parse_config(config(n=3, max_degree=12)))
    assert "floor φ(3)=2" in report["results"]["pertinency"]["result"]["annotations"]


def test_membership_queries():
    data = config(n=3, smash={"kind": "dual"}, grading=[1, 1, 2], max_degree=6,
                  tasks=["membership"], membership=[[2, 0, 0], [0, 0, 0]])
    out = run_experiment(parse_config(data))["results"]["membership"]["result"]
    assert [q["in_I"] for q in out["queries"]] == [True, False]


def test_explicit_group_with_roots_of_unity():
    data = config(ring={"n": 2, "q": "commutative"}, field={"kind": "cyclotomic", "n": 4},
                  group={"kind": "explicit",
                         "generators": [{"perm": [0, 1], "scalars": [{"zeta": 1}, {"zeta": 3}]}]},
                  tasks=["molien", "hdet"], max_degree=8)
    res = run_experiment(parse_config(data))["results"]
    assert res["molien"]["result"]["molien"] == [1, 0, 1, 0, 3, 0, 3, 0, 5]
    assert res["hdet"]["result"]["all_one"]


def test_task_errors_are_attributed(monkeypatch):
    def boom(*args):
        raise ArithmeticError("synthetic failure")

    monkeypatch.setattr(runner, "task_hdet", boom)
    report = run_experiment(parse_config(config(tasks=["hdet", "reflection"])))
    assert report["results"]["hdet"]["status"] == "error"
    assert "synthetic failure" in report["results"]["hdet"]["error"]
    assert report["results"]["reflection"]["status"] == "ok"


def test_emit_formats():
    report = run_experiment(parse_config(config(field_policy="exact")))
    text = emit_report(report, "json")
    assert parse_json_report(text) == report
    assert emit_report(parse_json_report(text), "json") == text
    csv_text = emit_report(report, "csv")
    assert csv_text.splitlines()[0] == "degree,dim_B,dim_I,h"
    assert csv_text.splitlines()[1:4] == ["0,2,1,1", "1,4,3,1", "2,6,6,0"]
    table = emit_report(report, "table")
    assert "certified_finite at degree 2" in table
    with pytest.raises(ValueError):
        emit_report(report, "xml")


def test_json_is_byte_identical_across_runs():
    cfg = parse_config(config(tasks=["pertinency", "trace", "hdet"]))
    assert emit_report(run_experiment(cfg), "json") == emit_report(run_experiment(cfg), "json")


def test_timings_only_on_request():
    cfg = parse_config(config())
    assert run_experiment(cfg)["timings_ms"] == {}
    assert "pertinency" in run_experiment(cfg, timings=True)["timings_ms"]


def test_main_exit_codes(tmp_path, capsys, monkeypatch):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(config()))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(config(field={"kind": "prime", "p": 2})))
    assert main(["validate", str(good)]) == 0
    assert main(["validate", str(bad)]) == 2
    assert main(["run", str(bad)]) == 2
    assert main(["run", str(tmp_path / "missing.json")]) == 2
    assert main(["run", str(good), "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[-1].startswith("10,")

    def boom(*args):
        raise ArithmeticError("synthetic failure")

    monkeypatch.setattr(runner, "task_pertinency", boom)
    assert main(["run", str(good)]) == 1


def test_repro_list(capsys):
    assert main(["repro", "list"]) == 0
    out = capsys.readouterr().out
    for cid in case_ids():
        assert cid in out
    assert main(["repro", "no-such-case"]) == 2


def test_repro_case_small():
    assert main(["repro", "commutative-contrast"]) == 0


def test_repro_cases_are_valid_configs():
    for cid in case_ids():
        assert case_configs(cid)


def test_closed_formulas():
    assert [expected_reflection_number(n) for n in range(2, 9)] == [2, 2, 4, 4, 4, 6, 8]
    assert [totient_floor(n) for n in (3, 4, 5, 6, 8)] == [2, 1, 4, 2, 2]
