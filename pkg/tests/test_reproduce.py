import pytest

from fatcheck.reproduce import CaseReport, case_names, reproduce

KNOWN_MISMATCH = "cp4-tangent"


@pytest.mark.parametrize("name", [n for n in case_names() if n != KNOWN_MISMATCH])
def test_case_matches(name):
    report = reproduce(name)
    assert report.passed, report.report()
    assert report.exit_code == 0


def test_cp4_mismatch_is_only_the_published_display():
    report = reproduce(KNOWN_MISMATCH)
    assert not report.passed
    bad = [i.label for i in report.items if not i.ok]
    assert bad == ["polynomial along e1 + t e2 proportional to the published one"]
    assert report.item("polynomial proportional to the recomputed reference").ok
    assert report.item("distinct roots in [-1, 0]").ok
    assert report.item("verdict").ok


def test_unknown_case():
    with pytest.raises(KeyError):
        reproduce("nope")


def test_empty_report_does_not_pass():
    assert not CaseReport("empty").passed


def test_report_lines():
    text = reproduce("g2-so4").report()
    assert text.splitlines()[0].startswith("g2-so4: MATCH")
    assert all(line.startswith("  [match]") for line in text.splitlines()[1:])
