"""Configuration package for the growth-analysis toolkit."""

from .analysis_loader import config_sha256, load_analysis_config
from .cli_response import error_response
from .rescue import rescue_from
from .settings import APP_VERSION, settings
from .structlog_config import configure_structlog, get_logger

__all__ = [
    "APP_VERSION",
    "config_sha256",
    "configure_structlog",
    "error_response",
    "get_logger",
    "load_analysis_config",
    "rescue_from",
    "settings",
]
