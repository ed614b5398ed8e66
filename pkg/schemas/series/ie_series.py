"""Information-entropy series schema."""

import math
from typing import Dict, List

import numpy as np
from pydantic import BaseModel, model_validator


class IESeries(BaseModel):
    """Log of a series relative to its base-year value; zero at the base year.

    Model outputs (e.g. a chained prediction) set anchored=False: their base-year
    point is whatever the model gives rather than 0.
    """

    name: str
    base_year: int
    points: Dict[int, float]
    anchored: bool = True

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_points(self) -> "IESeries":
        if self.anchored and self.base_year not in self.points:
            raise ValueError(f"base year {self.base_year} missing from points")
        if self.anchored and self.points[self.base_year] != 0.0:
            raise ValueError("point at the base year must be exactly 0")
        years = list(self.points)
        if any(later <= earlier for earlier, later in zip(years, years[1:])):
            raise ValueError("years must be strictly increasing")
        if not all(math.isfinite(point) for point in self.points.values()):
            raise ValueError("points must be finite")
        return self

    @property
    def years(self) -> List[int]:
        return list(self.points)

    @property
    def values(self) -> np.ndarray:
        return np.fromiter(self.points.values(), dtype=float, count=len(self.points))

    def __contains__(self, year: int) -> bool:
        return year in self.points

    def point(self, year: int) -> float:
        return self.points[year]
