"""Phase schema."""

from typing import List

from pydantic import BaseModel, Field, model_validator


class Phase(BaseModel):
    """Named inclusive window of years, e.g. P1 = 2000-2007."""

    label: str = Field(min_length=1)
    start_year: int
    end_year: int

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_window(self) -> "Phase":
        if self.start_year > self.end_year:
            raise ValueError(
                f"phase {self.label}: start {self.start_year} is after end {self.end_year}"
            )
        return self

    def contains(self, year: int) -> bool:
        return self.start_year <= year <= self.end_year

    def years(self) -> List[int]:
        return list(range(self.start_year, self.end_year + 1))

    def __str__(self) -> str:
        return f"{self.label} {self.start_year}-{self.end_year}"


# Segmentation used throughout the UK analysis
CANONICAL_PHASES = (
    Phase(label="P1", start_year=2000, end_year=2007),
    Phase(label="P2", start_year=2008, end_year=2013),
    Phase(label="P3", start_year=2014, end_year=2019),
)

# Split quoted once for the investment discussion
ALTERNATE_PHASES = (
    Phase(label="P1", start_year=2000, end_year=2007),
    Phase(label="P2", start_year=2008, end_year=2014),
    Phase(label="P3", start_year=2015, end_year=2019),
)
