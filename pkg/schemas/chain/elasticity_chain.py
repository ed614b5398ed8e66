"""Elasticity chain schema."""

from pydantic import BaseModel, model_validator

from ..fits import ElasticityFit
from ..series import Phase


class ElasticityChain(BaseModel):
    """Investment -> productivity -> GDP per capita elasticities for one phase."""

    phase: Phase
    inv_to_prod: ElasticityFit
    prod_to_gdppc: ElasticityFit

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_same_phase(self) -> "ElasticityChain":
        for fit in (self.inv_to_prod, self.prod_to_gdppc):
            if fit.base.phase != self.phase:
                raise ValueError(f"fit {fit.response_name} was not computed over {self.phase}")
        return self
