"""Base analysis exception class."""

from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

from .exit_codes import INTERNAL_ERROR


class AnalysisException(Exception):
    """Base exception for every failure the pipeline knows how to report."""

    def __init__(
        self,
        message: str,
        exit_code: int = INTERNAL_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.exit_code = exit_code
        self.context: Dict[str, Any] = dict(context or {})
        super().__init__(self.message)

    def __str__(self) -> str:
        if not self.context:
            return self.message
        details = ", ".join(f"{key}={value}" for key, value in self.context.items())
        return f"{self.message} ({details})"

    def to_payload(self) -> Dict[str, Any]:
        """Error body written by the CLI rescue handlers."""
        return {"type": type(self).__name__, "message": self.message, **self.context}


@contextmanager
def with_context(**context: Any) -> Iterator[None]:
    """Attach stage/role details to any AnalysisException raised in the block.

    Keys already present on the exception win, so the innermost stage is kept.
    """
    try:
        yield
    except AnalysisException as exc:
        for key, value in context.items():
            if value is not None:
                exc.context.setdefault(key, value)
        raise
