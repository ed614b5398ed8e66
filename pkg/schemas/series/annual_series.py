"""Annual series schema."""

import math
from enum import Enum
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator


class SeriesUnit(str, Enum):
    """Unit kind of an annual series."""

    INDEX = "index"
    PERCENT_CHANGE = "percent_change_per_annum"
    CURRENCY_LEVEL = "currency_level"
    POPULATION_COUNT = "population_count"

    @property
    def is_level(self) -> bool:
        return self is not SeriesUnit.PERCENT_CHANGE


class AnnualSeries(BaseModel):
    """Named annual observations keyed by year, in increasing year order."""

    name: str
    unit: SeriesUnit = SeriesUnit.INDEX
    observations: Dict[int, float]
    metadata: Dict[str, str] = Field(default_factory=dict)

    class Config:
        frozen = True

    @field_validator("observations")
    @classmethod
    def check_observations(cls, value: Dict[int, float]) -> Dict[int, float]:
        years = list(value)
        if any(later <= earlier for earlier, later in zip(years, years[1:])):
            raise ValueError("years must be strictly increasing")
        for year, observed in value.items():
            if not math.isfinite(observed):
                raise ValueError(f"non-finite value for {year}")
        return value

    @model_validator(mode="after")
    def check_unit_domain(self) -> "AnnualSeries":
        for year, observed in self.observations.items():
            if self.unit.is_level and observed <= 0:
                raise ValueError(f"{self.unit.value} value for {year} must be > 0, got {observed}")
            if not self.unit.is_level and observed <= -100:
                raise ValueError(f"percent change for {year} must be > -100, got {observed}")
        return self

    @property
    def years(self) -> List[int]:
        return list(self.observations)

    @property
    def values(self) -> np.ndarray:
        return np.fromiter(self.observations.values(), dtype=float, count=len(self.observations))

    @property
    def first_year(self) -> Optional[int]:
        return next(iter(self.observations), None)

    def __len__(self) -> int:
        return len(self.observations)

    def __contains__(self, year: int) -> bool:
        return year in self.observations

    def value(self, year: int) -> float:
        return self.observations[year]

    def restrict(self, start: int, end: int) -> "AnnualSeries":
        """Observations with start <= year <= end."""
        kept = {year: v for year, v in self.observations.items() if start <= year <= end}
        return self.model_copy(update={"observations": kept})
