"""Prediction result schema."""

from typing import Dict, List

from pydantic import BaseModel, Field, model_validator

from ..series import AnnualSeries


class PredictionResult(BaseModel):
    """Predicted against observed GDP with the folded accuracy score.

    comparison_slope regresses observed on predicted through the origin;
    reverse_slope is the same fit with the roles swapped.
    """

    predicted_gdp: AnnualSeries
    observed_gdp: AnnualSeries
    evaluation_years: List[int]
    accuracy: float = Field(gt=0.0, le=1.0)
    comparison_slope: float
    reverse_slope: float
    in_phase: Dict[int, bool] = Field(default_factory=dict)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_score(self) -> "PredictionResult":
        slope = self.comparison_slope
        expected = 1.0 / slope if slope >= 1.0 else slope
        if abs(expected - self.accuracy) > 1e-12:
            raise ValueError("accuracy must be min(slope, 1/slope)")
        for year in self.evaluation_years:
            if year not in self.predicted_gdp or year not in self.observed_gdp:
                raise ValueError(f"evaluation year {year} missing from a series")
        return self

    @property
    def out_of_phase_years(self) -> List[int]:
        return [year for year, flag in self.in_phase.items() if not flag]
