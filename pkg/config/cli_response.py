"""CLI response helpers."""

from datetime import datetime, timezone
from typing import Any, Dict

import click

from schemas import ErrorResponse


def error_response(errors: Dict[str, Any], exit_code: int) -> int:
    """Write an error payload to stderr and hand back the exit code."""
    payload = ErrorResponse(errors=errors, timestamp=datetime.now(timezone.utc).isoformat())
    click.echo(payload.model_dump_json(), err=True)
    return exit_code
