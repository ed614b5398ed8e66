"""Command modules, one per CLI verb."""

from .analyze import analyze
from .elasticity import elasticity
from .fit import fit
from .transform import transform
from .version import version

COMMANDS = [analyze, transform, fit, elasticity, version]

__all__ = ["COMMANDS", "analyze", "elasticity", "fit", "transform", "version"]
