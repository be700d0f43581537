"""The claim-by-claim verification suite."""

import pytest

from absorder import run_verify_suite


def test_quick_profile_all_claims_pass():
    report = run_verify_suite(profile="quick")
    assert report.ok()
    ids = [r.claim for r in report.results]
    assert len(ids) == len(set(ids))
    assert "coxeter-interval-invariants" in ids
    assert all(r.verdict for r in report.results)


def test_report_serializes():
    report = run_verify_suite(profile="quick")
    data = report.to_json()
    assert data["profile"] == "quick"
    assert len(data["results"]) == len(report.results)
    first = data["results"][0]
    for key in ("claim", "statement", "expected", "computed", "verdict"):
        assert key in first


def test_fault_injection_flips_exactly_one_claim():
    report = run_verify_suite(profile="quick", fault="zeta-consistency")
    assert not report.ok()
    bad = [r for r in report.results if not r.verdict]
    assert len(bad) == 1
    assert bad[0].claim == "zeta-consistency"
    assert "injected fault" in bad[0].computed


def test_unknown_fault_is_rejected():
    with pytest.raises(ValueError):
        run_verify_suite(profile="quick", fault="no-such-claim")


def test_unknown_profile_is_rejected():
    with pytest.raises(ValueError):
        run_verify_suite(profile="exhaustive")
