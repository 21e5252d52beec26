"""Verification machinery: naming, filtering, and tamper sensitivity."""

import citesim.indicators as indicators
from citesim import verification


def test_run_checks_filter_names():
    results = verification.run_checks(filter_text="table1")
    assert [r.name for r in results] == [
        "table1-probabilities",
        "table1-h",
        "table1-sum-citations",
    ]
    assert all(r.passed for r in results)


def test_run_checks_unknown_filter_is_empty():
    assert verification.run_checks(filter_text="no-such-check") == []


def test_results_carry_detail_text():
    result = verification.check_table1_sum_citations()
    assert result.name == "table1-sum-citations"
    assert "worst rel dev" in result.detail


def test_probability_check_detects_biased_tail(monkeypatch):
    # a 1e-3 bias in the survival tail must trip the probability cells,
    # whose decimal tolerance is 5e-5
    original = indicators.survival_probability

    def biased(c, params):
        return min(original(c, params) + 1e-3, 1.0)

    indicators.default_study.cache_clear()
    monkeypatch.setattr(indicators, "survival_probability", biased)
    try:
        result = verification.check_table1_probabilities()
    finally:
        indicators.default_study.cache_clear()
    assert not result.passed
    assert "out of tolerance" in result.detail
