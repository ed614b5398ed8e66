"""Inclusive year range schema."""

from typing import List

from pydantic import BaseModel, model_validator


class YearRange(BaseModel):
    """Inclusive range of Gregorian years."""

    start: int
    end: int

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_order(self) -> "YearRange":
        if self.start > self.end:
            raise ValueError(f"start {self.start} is after end {self.end}")
        return self

    def years(self) -> List[int]:
        return list(range(self.start, self.end + 1))

    def __contains__(self, year: int) -> bool:
        return self.start <= year <= self.end
