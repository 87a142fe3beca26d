import json
from fractions import Fraction
from pathlib import Path

import pytest

from prodlab.lab.bounds import OMEGA, TailKind
from prodlab.lab.config import build_sequence, load_config, parse_config, parse_tolerance, run_experiment
from prodlab.lab.exceptions import ConfigError

CIRCLE_CONFIG = {
    "group": {"kind": "circle"},
    "sequence": {"rule": "geometric", "params": {"base": 3}},
    "analysis": "productive",
    "cfg": {"tolerance": "1/1024", "horizon": 48, "seed": 7},
}


def test_parse_tolerance_forms():
    assert parse_tolerance("1/1024") == Fraction(1, 1024)
    assert parse_tolerance("2^-10") == Fraction(1, 1024)
    assert parse_tolerance("3") == 3
    assert parse_tolerance(2) == 2
    for bad in ("0.001", "1/0", "tiny"):
        with pytest.raises(ValueError):
            parse_tolerance(bad)


def test_bound_spec_reads_dashed_names():
    config = parse_config(
        json.dumps(
            {
                **CIRCLE_CONFIG,
                "analysis": "f-productive",
                "f": {"tail-rule": "periodic", "period": ["omega", 1]},
            }
        )
    )
    f = config.f.to_bound()
    assert f.tail is TailKind.PERIODIC
    assert [f(n) for n in range(3)] == [OMEGA, 1, OMEGA]


def test_invalid_tail_rule_names_the_field():
    text = json.dumps({**CIRCLE_CONFIG, "f": {"tail-rule": "sometimes"}})
    with pytest.raises(ConfigError) as exc:
        parse_config(text)
    assert exc.value.field == "f.tail-rule"


def test_unknown_keys_are_rejected():
    with pytest.raises(ConfigError) as exc:
        parse_config(json.dumps({**CIRCLE_CONFIG, "colour": "blue"}))
    assert exc.value.field == "colour"


def test_bad_tolerance_is_reported_on_its_field():
    cfg = {**CIRCLE_CONFIG["cfg"], "tolerance": "small"}
    with pytest.raises(ConfigError) as exc:
        parse_config(json.dumps({**CIRCLE_CONFIG, "cfg": cfg}))
    assert exc.value.field == "cfg.tolerance"


def test_malformed_json_reports_its_line():
    with pytest.raises(ConfigError) as exc:
        parse_config('{\n  "analysis": "null",\n  oops\n}')
    assert "line 3" in str(exc.value)


def test_missing_config_file(tmp_path: Path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")


def test_rule_checks_the_group_kind():
    config = parse_config(json.dumps({**CIRCLE_CONFIG, "group": {"kind": "sym-fin"}}))
    with pytest.raises(ConfigError) as exc:
        build_sequence(config)
    assert exc.value.field == "group"


def test_padic_group_needs_depth():
    config = parse_config(
        json.dumps(
            {
                **CIRCLE_CONFIG,
                "group": {"kind": "padic", "p": 3},
                "sequence": {"rule": "powers"},
            }
        )
    )
    with pytest.raises(ConfigError) as exc:
        build_sequence(config)
    assert exc.value.field == "group.depth"


def test_run_circle_experiment(tmp_path: Path):
    path = tmp_path / "circle.json"
    path.write_text(json.dumps(CIRCLE_CONFIG), encoding="utf-8")
    report, trace = run_experiment(load_config(path), seed=99)
    assert report["analysis"] == "productive"
    assert report["seed"] == 7
    assert report["tolerance"] == "1/1024"
    assert report["verdict"]["status"] == "holds"
    assert report["report"]["limit"] == "1/2"
    assert len(trace) == 48


def test_run_bounded_probe_without_sequence():
    config = parse_config(
        json.dumps(
            {
                "analysis": "bounded-probe",
                "f": {"tail-rule": "constant", "value": 3},
                "cfg": {"tolerance": "2^-10", "horizon": 40, "trials": 2, "exhaustive-threshold": 32},
            }
        )
    )
    report, trace = run_experiment(config)
    assert report["verdict"]["status"] == "holds"
    assert report["verdict"]["witness"]["bound"] == 3
    assert trace == []


def test_f_analysis_needs_a_bound():
    config = parse_config(json.dumps({**CIRCLE_CONFIG, "analysis": "f-productive"}))
    with pytest.raises(ConfigError) as exc:
        run_experiment(config)
    assert exc.value.field == "f"


@pytest.mark.parametrize(
    "path",
    sorted((Path(__file__).parent.parent / "experiments").glob("*.json")),
    ids=lambda p: p.stem,
)
def test_shipped_experiments_are_valid(path: Path):
    config = load_config(path)
    if config.sequence is not None:
        build_sequence(config)
