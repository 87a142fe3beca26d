from fractions import Fraction

import pytest

from prodlab.lab import suites
from prodlab.lab.exceptions import UnknownSuiteError
from prodlab.lab.suites import SuiteItem, report_passed, run_suite, suite_names
from prodlab.lab.verdict import Status, Verdict


def test_suite_names_include_all():
    names = suite_names()
    assert names[-1] == "all"
    assert {"crt", "padic", "cantor", "hp-example", "reordering"} <= set(names)


def test_unknown_suite_raises():
    with pytest.raises(UnknownSuiteError):
        run_suite("no-such-suite")


def test_item_passes_when_verdict_matches_expectation():
    fails = Verdict(Status.FAILS, 8, Fraction(1, 4), {"l": 1, "m": 2})
    assert SuiteItem("x", fails, expected=Status.FAILS).passed
    assert not SuiteItem("x", fails).passed
    row = SuiteItem("x", fails, expected=Status.FAILS).to_dict()
    assert row == {
        "name": "x",
        "verdict": "fails",
        "witness": {"l": 1, "m": 2},
        "expected": "fails",
        "pass": True,
    }


@pytest.mark.parametrize("name", ["crt", "padic", "cantor"])
def test_fast_suites_pass(name):
    report = run_suite(name, seed=3)
    assert report["suite"] == name
    assert report["seed"] == 3
    assert report["items"]
    assert report_passed(report), [i["name"] for i in report["items"] if not i["pass"]]


def test_crt_suite_examples():
    items = {item["name"]: item for item in run_suite("crt")["items"]}
    assert items["crt/examples"]["witness"] == {"z": [8, 14, 0]}
    assert items["crt/random"]["witness"]["mismatches"] == 0


def test_all_prefixes_item_names(monkeypatch):
    monkeypatch.setattr(suites, "SUITES", {"crt": (0, suites.crt_suite), "cantor": (10, suites.cantor_suite)})
    report = run_suite("all", seed=1)
    assert report["suite"] == "all"
    assert report["horizon"] == 10
    names = [item["name"] for item in report["items"]]
    assert "crt/crt/examples" in names
    assert "cantor/cantor/leaf-count" in names


def test_reordering_sequence_layout():
    seq = suites.reordering_sequence()
    assert seq[0].coords[0] == Fraction(1, 2)
    assert seq[1].coords[1] == Fraction(1, 2)
    assert seq[4].coords[2] == Fraction(1, 2)
