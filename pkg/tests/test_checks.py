import pytest

from qweil import checks
from qweil.checks import Check, Report, run_check, run_suite


@pytest.mark.parametrize("name", checks.SUITE_NAMES)
def test_every_suite_passes(name):
    report = run_suite(name)
    failed = [(r.id, r.witness) for r in report.results if not r.passed]
    assert failed == []


def test_ids_are_unique_and_prefixed():
    seen = set()
    prefixes = {"scalars": "scalars.", "uq": "uq.", "clq": "clq.", "braid": "braid.", "weil": "weil.", "modules": "modules."}
    for name, factory in checks.SUITES.items():
        for check in factory():
            assert check.id.startswith(prefixes[name])
            assert check.id not in seen
            seen.add(check.id)
            assert check.anchor


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_crashing_check_is_a_failure():
    def boom():
        raise ZeroDivisionError("zero divisor")

    result = run_check(Check("x.boom", "crash", boom))
    assert not result.passed
    assert result.witness == "ZeroDivisionError: zero divisor"


def test_false_without_witness_gets_a_default():
    result = run_check(Check("x.false", "plain false", lambda: False))
    assert not result.passed and result.witness


def test_report_text_and_json():
    report = Report("demo", [run_check(Check("b.two", "second", lambda: True)), run_check(Check("a.one", "first", lambda: (False, "w")))], 12)
    text = report.to_text()
    assert text.splitlines()[0] == "FAIL  a.one  [first]"
    assert "witness: w" in text
    assert report.as_dict(timing=False)["ms"] == 0
    assert report.as_dict()["ms"] == 12
    assert not report.ok and report.passed == 1


def test_seed_override(monkeypatch):
    monkeypatch.setenv("QWEIL_SEED", "7")
    assert checks.default_seed() == 7
    monkeypatch.delenv("QWEIL_SEED")
    assert checks.default_seed() == checks.DEFAULT_SEED
    assert checks.integration_triples(3, 5) == checks.integration_triples(3, 5)
