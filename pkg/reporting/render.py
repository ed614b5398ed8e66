"""Report rendering as a fixed-order YAML document."""

from typing import Any, Dict, Optional

import yaml

from config.settings import settings
from schemas import ElasticityChain, ElasticityFit, GrowthFit, LinearFit, PredictionResult, Report

REPORT_FILENAME = "report.yml"


class ReportRenderer:
    """Turns report models into plain YAML-safe structures with rounded numbers."""

    def __init__(self, digits: int):
        self.digits = digits

    def number(self, value: float) -> float:
        return float(f"{value:.{self.digits}g}")

    def percent(self, fraction: float) -> str:
        return f"{fraction * 100:.2f}%"

    def line(self, fit: LinearFit) -> Dict[str, Any]:
        body: Dict[str, Any] = {
            "slope": self.number(fit.slope),
            "intercept": self.number(fit.intercept),
            "r_squared": self.number(fit.r_squared),
            "slope_se": self.number(fit.slope_se),
            "n": fit.n,
            "through_origin": fit.through_origin,
        }
        if fit.phase is not None:
            body["start_year"] = fit.phase.start_year
            body["end_year"] = fit.phase.end_year
        return body

    def growth(self, fit: GrowthFit) -> Dict[str, Any]:
        return {
            "lambda": self.number(fit.lambda_),
            "annual_rate": self.number(fit.annual_rate),
            "annual_rate_percent": self.percent(fit.annual_rate),
            **self.line(fit.base),
        }

    def elasticity(self, fit: ElasticityFit) -> Dict[str, Any]:
        return {
            "response": fit.response_name,
            "predictor": fit.predictor_name,
            **self.line(fit.base),
        }

    def chain(self, chain: ElasticityChain) -> Dict[str, Any]:
        return {
            "phase": str(chain.phase),
            "investment_to_productivity": self.elasticity(chain.inv_to_prod),
            "productivity_to_gdp_per_capita": self.elasticity(chain.prod_to_gdppc),
        }

    def prediction(self, result: Optional[PredictionResult]) -> Optional[Dict[str, Any]]:
        if result is None:
            return None
        rows = [
            {
                "year": year,
                "observed_gdp": self.number(result.observed_gdp.value(year)),
                "predicted_gdp": self.number(result.predicted_gdp.value(year)),
                "in_phase": result.in_phase.get(year, False),
            }
            for year in result.predicted_gdp.years
            if year in result.observed_gdp
        ]
        return {
            "accuracy": self.number(result.accuracy),
            "accuracy_percent": self.percent(result.accuracy),
            "comparison_slope": self.number(result.comparison_slope),
            "reverse_slope": self.number(result.reverse_slope),
            "evaluation_years": list(result.evaluation_years),
            "out_of_phase_years": result.out_of_phase_years,
            "series": rows,
        }

    def report(self, report: Report) -> Dict[str, Any]:
        provenance = report.provenance
        return {
            "provenance": {
                "tool_version": provenance.tool_version,
                "config_sha256": provenance.config_sha256,
                "base_year": provenance.base_year,
                "analysis_range": provenance.analysis_range.model_dump(),
                "phases": [phase.model_dump() for phase in provenance.phases],
                "manifest": (
                    provenance.manifest.model_dump(mode="json")
                    if provenance.manifest is not None
                    else None
                ),
            },
            "growth": {
                role: {window: self.growth(fit) for window, fit in fits.items()}
                for role, fits in report.growth.items()
            },
            "elasticities": {
                pair: {label: self.elasticity(fit) for label, fit in fits.items()}
                for pair, fits in report.elasticities.items()
            },
            "chains": {label: self.chain(chain) for label, chain in report.chains.items()},
            "prediction": self.prediction(report.prediction),
        }


def report_document(report: Report, digits: Optional[int] = None) -> Dict[str, Any]:
    """Plain structure written to the report file."""
    return ReportRenderer(digits or settings.report_significant_digits).report(report)


def render_report(report: Report, digits: Optional[int] = None) -> str:
    return yaml.safe_dump(
        report_document(report, digits),
        sort_keys=False,
        default_flow_style=False,
        allow_unicode=True,
    )
