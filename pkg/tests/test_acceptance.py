"""
Tests selecting and running the acceptance criteria in `acceptance.py`.
"""
import pytest

from vg_algebra import acceptance
from vg_algebra.errors import InvariantViolation, UsageException


def test_select_all():
    """ Test every criterion is selected when no module is named """
    criteria = acceptance.select()
    assert [c.number for c in criteria] == [0, 0] + list(range(1, 13))
    assert {c.module for c in criteria} == set(acceptance.MODULES)

def test_select_modules():
    """ Test selecting criteria by module """
    criteria = acceptance.select(["omatroid"])
    assert [c.number for c in criteria] == [4]

def test_select_unknown():
    """ Test an unknown module name """
    with pytest.raises(UsageException) as e:
        acceptance.select(["exactla", "topology"])
    assert str(e.value) == ("unknown module(s) topology, choose from catalog, exactla, "
                            "arrangement, omatroid, vgalgebra, reconstruct")

def test_run_exactla():
    """ Test the exact linear algebra identities hold for two seeds """
    for seed in (0, 11):
        report = acceptance.run(["exactla"], seed)
        assert report.passed
        assert report.first_failure is None
        assert report.to_json()["results"] == [{
            "criterion": 0,
            "module": "exactla",
            "title": "exact linear algebra identities",
            "passed": True,
        }]

def test_run_arrangement():
    """ Test the A3 basics and the cross-module consistency checks """
    report = acceptance.run(["arrangement"], 3)
    assert [r["criterion"] for r in report.results] == [1, 12]
    assert report.passed

def test_run_records_failures(monkeypatch):
    """ Test a failing check is recorded and later criteria still run """
    def fail(seed):
        raise InvariantViolation(f"broken for seed {seed}")

    criteria = (
        acceptance.Criterion(1, "arrangement", "always fails", fail),
        acceptance.Criterion(2, "arrangement", "always passes", lambda seed: None),
    )
    monkeypatch.setattr(acceptance, "CRITERIA", criteria)
    report = acceptance.run([], 5)
    assert not report.passed
    assert report.first_failure["message"] == "broken for seed 5"
    assert report.results[1]["passed"]
    assert report.to_json()["passed"] is False
