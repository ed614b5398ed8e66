"""Series spec schema."""

from enum import Enum
from pathlib import Path
from typing import Dict, Optional

from pydantic import BaseModel, Field, ValidationInfo, field_validator, model_validator

from ..series import SeriesUnit


class SeriesRole(str, Enum):
    """Role a source series plays in the analysis."""

    GDP = "gdp"
    CPI = "cpi"
    GDP_PER_CAPITA = "gdp_per_capita"
    PRODUCTIVITY = "productivity"
    WAGES = "wages"
    INVESTMENT = "investment"
    POPULATION = "population"


class SeriesFormat(str, Enum):
    """Source file layout."""

    GENERIC_YEAR_VALUE = "generic_year_value"
    ONS_TIMESERIES = "ons_timeseries"
    OECD_LONG = "oecd_long"


# GDP (Macrotrends) and productivity (ONS LZVD) are published as growth rates
ROLE_DEFAULT_UNITS: Dict[SeriesRole, SeriesUnit] = {
    SeriesRole.GDP: SeriesUnit.PERCENT_CHANGE,
    SeriesRole.CPI: SeriesUnit.INDEX,
    SeriesRole.GDP_PER_CAPITA: SeriesUnit.CURRENCY_LEVEL,
    SeriesRole.PRODUCTIVITY: SeriesUnit.PERCENT_CHANGE,
    SeriesRole.WAGES: SeriesUnit.CURRENCY_LEVEL,
    SeriesRole.INVESTMENT: SeriesUnit.CURRENCY_LEVEL,
    SeriesRole.POPULATION: SeriesUnit.POPULATION_COUNT,
}


class SeriesSpec(BaseModel):
    """Where one role's source lives and how to read it."""

    id: str = Field(min_length=1)
    role: SeriesRole
    path: Path
    format: SeriesFormat = SeriesFormat.GENERIC_YEAR_VALUE
    unit: Optional[SeriesUnit] = Field(default=None, validate_default=True)
    base_year: Optional[int] = None
    scale: float = Field(default=1.0, gt=0.0)
    country: Optional[str] = None
    filters: Dict[str, str] = Field(default_factory=dict)

    class Config:
        frozen = True

    @field_validator("unit")
    @classmethod
    def default_unit(cls, value: Optional[SeriesUnit], info: ValidationInfo) -> Optional[SeriesUnit]:
        if value is None and "role" in info.data:
            return ROLE_DEFAULT_UNITS[info.data["role"]]
        return value

    @model_validator(mode="after")
    def check_unit_and_format(self) -> "SeriesSpec":
        is_population = self.role is SeriesRole.POPULATION
        if is_population and self.unit not in (SeriesUnit.POPULATION_COUNT, SeriesUnit.INDEX):
            raise ValueError(f"population must be a count or an index, got {self.unit}")
        if not is_population and self.unit is SeriesUnit.POPULATION_COUNT:
            raise ValueError(f"{self.role.value} cannot use unit population_count")
        if self.format is SeriesFormat.OECD_LONG and not self.country:
            raise ValueError(f"{self.id}: oecd_long sources need a country filter")
        return self
