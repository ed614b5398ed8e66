"""Growth fit schema."""

from pydantic import BaseModel, Field, model_validator

from ..series import rates_agree
from .linear_fit import LinearFit


class GrowthFit(BaseModel):
    """Line of IE value against years since the base year."""

    base: LinearFit
    lambda_: float = Field(alias="lambda")
    annual_rate: float
    series_name: str = ""

    class Config:
        frozen = True
        populate_by_name = True

    @model_validator(mode="after")
    def check_rate(self) -> "GrowthFit":
        if self.lambda_ != self.base.slope:
            raise ValueError("lambda must equal the fitted slope")
        if not rates_agree(self.lambda_, self.annual_rate):
            raise ValueError("annual_rate inconsistent with lambda")
        return self
