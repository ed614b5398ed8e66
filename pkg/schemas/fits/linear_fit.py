"""Linear fit schema."""

from typing import Optional

from pydantic import BaseModel, Field

from ..series import Phase


class LinearFit(BaseModel):
    """Ordinary least-squares line y = intercept + slope * x."""

    slope: float
    intercept: float
    r_squared: float = Field(ge=0.0, le=1.0)
    n: int = Field(ge=3)
    slope_se: float = Field(default=0.0, ge=0.0)
    through_origin: bool = False
    phase: Optional[Phase] = None

    class Config:
        frozen = True

    def predict(self, x: float) -> float:
        return self.intercept + self.slope * x
