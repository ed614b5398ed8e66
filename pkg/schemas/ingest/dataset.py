"""Dataset schema."""

from typing import Dict, List

from pydantic import BaseModel, Field, model_validator

from ..common import YearRange
from ..series import AnnualSeries
from .series_spec import SeriesRole, SeriesSpec


class Dataset(BaseModel):
    """Validated series by role, all covering the analysis range without gaps."""

    series: Dict[SeriesRole, AnnualSeries]
    coverage: YearRange
    base_year: int
    specs: List[SeriesSpec] = Field(default_factory=list)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_coverage(self) -> "Dataset":
        expected = self.coverage.years()
        for role, series in self.series.items():
            if series.years != expected:
                raise ValueError(f"{role.value} does not cover {self.coverage.start}-{self.coverage.end}")
        if self.base_year not in self.coverage:
            raise ValueError(f"base year {self.base_year} outside the coverage")
        return self

    def __getitem__(self, role: SeriesRole) -> AnnualSeries:
        return self.series[role]

    @property
    def roles(self) -> List[SeriesRole]:
        return list(self.series)
