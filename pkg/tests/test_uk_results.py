"""Headline UK results reproduced from the vendored fixtures in data/uk."""

import pytest

from schemas import FULL_RANGE, SeriesRole


def _rate(report, role, window):
    return report.growth[role.value][window].annual_rate


def _slope(report, pair, phase):
    return report.elasticities[pair][phase].slope


def test_cpi_grows_about_two_percent(uk_report):
    assert _rate(uk_report, SeriesRole.CPI, FULL_RANGE) == pytest.approx(0.021, abs=0.002)


def test_gdp_per_capita_growth_slows(uk_report):
    early = _rate(uk_report, SeriesRole.GDP_PER_CAPITA, "P1")
    late = _rate(uk_report, SeriesRole.GDP_PER_CAPITA, "P3")
    assert early == pytest.approx(0.021, abs=0.003)
    assert late == pytest.approx(0.010, abs=0.003)
    assert late < 0.6 * early


@pytest.mark.parametrize(
    "pair, early, late",
    [
        ("gdp_per_capita_vs_productivity", 1.24, 1.14),
        ("wages_vs_productivity", 1.51, 1.05),
        ("productivity_vs_investment", 0.65, 0.54),
    ],
)
def test_elasticities(uk_report, pair, early, late):
    assert _slope(uk_report, pair, "P1") == pytest.approx(early, abs=0.1)
    assert _slope(uk_report, pair, "P3") == pytest.approx(late, abs=0.1)


def test_wage_elasticity_drops_by_about_a_third(uk_report):
    early = _slope(uk_report, "wages_vs_productivity", "P1")
    late = _slope(uk_report, "wages_vs_productivity", "P3")
    assert 0.20 <= 1 - late / early <= 0.40


def test_chain_matches_elasticity_fits(uk_report):
    for label, chain in uk_report.chains.items():
        assert chain.inv_to_prod == uk_report.elasticities["productivity_vs_investment"][label]
        assert chain.prod_to_gdppc == uk_report.elasticities["gdp_per_capita_vs_productivity"][label]


def test_prediction_accuracy(uk_report):
    prediction = uk_report.prediction
    assert prediction.accuracy == pytest.approx(0.998, abs=0.005)
    assert prediction.comparison_slope == pytest.approx(1.0, abs=0.005)
    assert prediction.evaluation_years == list(range(2000, 2008)) + list(range(2014, 2020))
    assert prediction.out_of_phase_years == list(range(2008, 2014))


def test_report_completeness(uk_report):
    assert sum(len(windows) for windows in uk_report.growth.values()) == 7 * 4
    assert sum(len(fits) for fits in uk_report.elasticities.values()) == 3 * 2
    assert len(uk_report.chains) == 2
    assert uk_report.prediction is not None


def test_provenance(uk_report):
    provenance = uk_report.provenance
    assert provenance.base_year == 2000
    assert provenance.manifest.dataset == "uk"
    assert len(provenance.config_sha256) == 64
