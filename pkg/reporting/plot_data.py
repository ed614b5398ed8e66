"""Plot-data CSV files, one per figure, with fixed names and headers.

fig01a  year, gdp_index
fig01b  year, cpi_index
fig02a  year, ie_gdp, fit_<phase>...
fig02b  year, ie_cpi, fit_full
fig03   year, ie_gdp_per_capita, fit_<phase>...
fig04   year, ie_productivity, ie_gdp_per_capita
fig05_k ie_productivity, ie_gdp_per_capita, fitted   (k-th evaluated phase)
fig06   year, ie_productivity, ie_wages
fig07_k ie_productivity, ie_wages, fitted
fig08   year, ie_investment, ie_productivity
fig09_k ie_investment, ie_productivity, fitted
fig10_1 year, observed_gdp, predicted_gdp, in_phase
fig10_2 predicted_gdp, observed_gdp, fitted          (evaluation years, zero intercept)

A file is written only when the report holds the data it plots.
"""

from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from config.settings import settings
from ie_core import ie_transform
from regress import common_phase_years
from schemas import FULL_RANGE, Dataset, ElasticityFit, GrowthFit, IESeries, Report, SeriesRole

from .pairs import ELASTICITY_PAIRS, PAIR_FIGURES

# (figure, predictor role, response role) scatter-by-year files
YEAR_PAIR_FIGURES = (
    ("fig04", SeriesRole.PRODUCTIVITY, SeriesRole.GDP_PER_CAPITA),
    ("fig06", SeriesRole.PRODUCTIVITY, SeriesRole.WAGES),
    ("fig08", SeriesRole.INVESTMENT, SeriesRole.PRODUCTIVITY),
)


class PlotWriter:
    """Writes frames as CSV with fixed float formatting and newline endings."""

    def __init__(self, output_dir: Path, digits: int):
        self.output_dir = Path(output_dir)
        self.float_format = f"%.{digits}g"
        self.written: List[Path] = []

    def write(self, name: str, frame: pd.DataFrame) -> None:
        path = self.output_dir / f"{name}.csv"
        frame.to_csv(path, index=False, float_format=self.float_format, lineterminator="\n")
        self.written.append(path)


def _ie_column(role: SeriesRole) -> str:
    return f"ie_{role.value}"


def _fit_columns(ie: IESeries, fits: Dict[str, GrowthFit], labels: List[str]) -> Dict[str, np.ndarray]:
    """Fitted line per window, blank outside the window."""
    columns: Dict[str, np.ndarray] = {}
    for label in labels:
        fit = fits[label]
        phase = fit.base.phase
        columns[f"fit_{label.lower()}"] = np.array(
            [
                fit.base.predict(year - ie.base_year)
                if phase is None or phase.contains(year)
                else np.nan
                for year in ie.years
            ]
        )
    return columns


def _growth_frame(ie: IESeries, role: SeriesRole, fits: Dict[str, GrowthFit], labels: List[str]) -> pd.DataFrame:
    return pd.DataFrame(
        {"year": ie.years, _ie_column(role): ie.values, **_fit_columns(ie, fits, labels)}
    )


def _scatter_frame(
    predictor: IESeries,
    response: IESeries,
    fit: ElasticityFit,
    predictor_role: SeriesRole,
    response_role: SeriesRole,
) -> pd.DataFrame:
    years = common_phase_years(fit.base.phase, predictor, response)
    x = np.array([predictor.point(year) for year in years])
    return pd.DataFrame(
        {
            _ie_column(predictor_role): x,
            _ie_column(response_role): [response.point(year) for year in years],
            "fitted": fit.base.intercept + fit.base.slope * x,
        }
    )


def _phase_labels(fits: Dict[str, GrowthFit]) -> List[str]:
    return [label for label in fits if label != FULL_RANGE]


def emit_plot_data(report: Report, dataset: Dataset, output_dir: Path, digits: Optional[int] = None) -> List[Path]:
    """Write every plot-data file the report supports; returns the paths written."""
    writer = PlotWriter(output_dir, digits or settings.report_significant_digits)
    ie = {role: ie_transform(dataset[role], dataset.base_year) for role in dataset.roles}

    for name, role, column in (
        ("fig01a", SeriesRole.GDP, "gdp_index"),
        ("fig01b", SeriesRole.CPI, "cpi_index"),
    ):
        if role in dataset.series:
            series = dataset[role]
            writer.write(name, pd.DataFrame({"year": series.years, column: series.values}))

    growth = report.growth
    if SeriesRole.GDP.value in growth:
        fits = growth[SeriesRole.GDP.value]
        writer.write("fig02a", _growth_frame(ie[SeriesRole.GDP], SeriesRole.GDP, fits, _phase_labels(fits)))
    if SeriesRole.CPI.value in growth:
        fits = growth[SeriesRole.CPI.value]
        writer.write("fig02b", _growth_frame(ie[SeriesRole.CPI], SeriesRole.CPI, fits, [FULL_RANGE]))
    if SeriesRole.GDP_PER_CAPITA.value in growth:
        fits = growth[SeriesRole.GDP_PER_CAPITA.value]
        writer.write(
            "fig03",
            _growth_frame(ie[SeriesRole.GDP_PER_CAPITA], SeriesRole.GDP_PER_CAPITA, fits, _phase_labels(fits)),
        )

    for name, predictor_role, response_role in YEAR_PAIR_FIGURES:
        if predictor_role in ie and response_role in ie:
            predictor, response = ie[predictor_role], ie[response_role]
            writer.write(
                name,
                pd.DataFrame(
                    {
                        "year": predictor.years,
                        _ie_column(predictor_role): predictor.values,
                        _ie_column(response_role): [response.point(year) for year in predictor.years],
                    }
                ),
            )

    for pair, fits in report.elasticities.items():
        stem = PAIR_FIGURES[pair]
        response_role, predictor_role = ELASTICITY_PAIRS[pair]
        for index, fit in enumerate(fits.values(), start=1):
            writer.write(
                f"{stem}_{index}",
                _scatter_frame(ie[predictor_role], ie[response_role], fit, predictor_role, response_role),
            )

    result = report.prediction
    if result is not None:
        years = [year for year in result.predicted_gdp.years if year in result.observed_gdp]
        writer.write(
            "fig10_1",
            pd.DataFrame(
                {
                    "year": years,
                    "observed_gdp": [result.observed_gdp.value(year) for year in years],
                    "predicted_gdp": [result.predicted_gdp.value(year) for year in years],
                    "in_phase": [int(result.in_phase.get(year, False)) for year in years],
                }
            ),
        )
        predicted = np.array([result.predicted_gdp.value(year) for year in result.evaluation_years])
        writer.write(
            "fig10_2",
            pd.DataFrame(
                {
                    "predicted_gdp": predicted,
                    "observed_gdp": [result.observed_gdp.value(year) for year in result.evaluation_years],
                    "fitted": result.comparison_slope * predicted,
                }
            ),
        )
    return writer.written
