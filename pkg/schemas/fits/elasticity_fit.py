"""Elasticity fit schema."""

from pydantic import BaseModel

from .linear_fit import LinearFit


class ElasticityFit(BaseModel):
    """Line of one IE series against another over common phase years."""

    base: LinearFit
    response_name: str
    predictor_name: str

    class Config:
        frozen = True

    @property
    def slope(self) -> float:
        return self.base.slope

    @property
    def intercept(self) -> float:
        return self.base.intercept
