"""Rate constant schema."""

import math

from pydantic import BaseModel, Field, model_validator

RATE_TOLERANCE = 1e-12


def rates_agree(lambda_: float, rate: float) -> bool:
    """rate == expm1(lambda) within RATE_TOLERANCE, relative once |rate| exceeds 1."""
    return abs(math.expm1(lambda_) - rate) <= RATE_TOLERANCE * max(1.0, abs(rate))


class RateConstant(BaseModel):
    """Exponential rate constant lambda and the matching annual growth rate r."""

    lambda_: float = Field(alias="lambda")
    rate: float

    class Config:
        frozen = True
        populate_by_name = True

    @model_validator(mode="after")
    def check_consistency(self) -> "RateConstant":
        if not rates_agree(self.lambda_, self.rate):
            raise ValueError(f"rate {self.rate} inconsistent with lambda {self.lambda_}")
        return self
