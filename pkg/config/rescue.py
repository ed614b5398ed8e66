"""Rescue_from handlers: map exceptions to an error payload and an exit code."""

import traceback
from typing import Callable, List, Tuple, Type

import click
from pydantic import ValidationError

from exceptions import AnalysisException
from exceptions.exit_codes import DATA_ERROR, INTERNAL_ERROR, USAGE_ERROR

from .cli_response import error_response
from .structlog_config import get_logger

Handler = Callable[[BaseException], int]

_HANDLERS: List[Tuple[Type[BaseException], Handler]] = []


def rescue(exc_type: Type[BaseException]) -> Callable[[Handler], Handler]:
    """Register a handler; the first registered matching type wins."""

    def register(handler: Handler) -> Handler:
        _HANDLERS.append((exc_type, handler))
        return handler

    return register


@rescue(AnalysisException)
def rescue_from_analysis_exception(exc: AnalysisException) -> int:
    return error_response(exc.to_payload(), exc.exit_code)


@rescue(click.UsageError)
def rescue_from_usage_error(exc: click.UsageError) -> int:
    exc.show()
    return USAGE_ERROR


@rescue(click.ClickException)
def rescue_from_click_exception(exc: click.ClickException) -> int:
    exc.show()
    return exc.exit_code


@rescue(ValidationError)
def rescue_from_validation_error(exc: ValidationError) -> int:
    errors = {
        ".".join(str(loc) for loc in error["loc"]) or "root": [error["msg"]] for error in exc.errors()
    }
    return error_response({"type": "ValidationError", **errors}, USAGE_ERROR)


@rescue(OSError)
def rescue_from_os_error(exc: OSError) -> int:
    return error_response({"type": "IOError", "message": str(exc)}, DATA_ERROR)


@rescue(Exception)
def rescue_from_general_exception(exc: Exception) -> int:
    get_logger("cli").error("Unhandled exception", traceback=traceback.format_exc())
    return error_response({"type": type(exc).__name__, "message": "Internal error"}, INTERNAL_ERROR)


def rescue_from(exc: BaseException) -> int:
    """Run the handler registered for the exception and return the exit code."""
    for exc_type, handler in _HANDLERS:
        if isinstance(exc, exc_type):
            return handler(exc)
    raise exc
