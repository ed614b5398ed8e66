"""Tabular reading shared by the source parsers."""

import io
import math
import re
from typing import BinaryIO, TextIO, Union

import pandas as pd

from exceptions import DomainError, EmptySeries, ParseError
from schemas import SeriesUnit

Source = Union[str, bytes, TextIO, BinaryIO]

_LINE_IN_MESSAGE = re.compile(r"line (\d+)")


def read_text(source: Source) -> str:
    """Character data from a string, bytes or an open stream (UTF-8, BOM stripped)."""
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = data[: exc.start].count(b"\n") + 1
            raise ParseError("input is not valid UTF-8", line=line) from exc
    return data.lstrip("\ufeff")


def read_frame(text: str, header: bool = False) -> pd.DataFrame:
    """Every field as a stripped string; blank lines kept so row i is line i + 1 (+1 with header)."""
    if not text.strip():
        raise EmptySeries("source is empty")
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            header=0 if header else None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            skipinitialspace=True,
        )
    except pd.errors.EmptyDataError as exc:
        raise EmptySeries("source is empty") from exc
    except (pd.errors.ParserError, ValueError) as exc:
        match = _LINE_IN_MESSAGE.search(str(exc))
        line = int(match.group(1)) if match else None
        raise ParseError(f"malformed CSV: {str(exc).strip()}", line=line) from exc
    frame = frame.fillna("")
    frame.columns = [str(column).strip() for column in frame.columns]
    for column in frame.columns:
        frame[column] = frame[column].astype(str).str.strip()
    return frame


def is_blank(row: pd.Series) -> bool:
    return all(field == "" for field in row)


def parse_value(raw: str, line: int, column: int) -> float:
    """Decimal with optional thousands separators; finite only."""
    cleaned = raw.replace(",", "").strip()
    try:
        value = float(cleaned)
    except ValueError as exc:
        raise ParseError(f"not a number: {raw!r}", line=line, column=column) from exc
    if not math.isfinite(value):
        raise ParseError(f"not a finite number: {raw!r}", line=line, column=column)
    return value


def parse_observation(raw: str, unit: SeriesUnit, line: int, column: int) -> float:
    """parse_value plus the unit's domain: levels > 0, percent changes > -100."""
    value = parse_value(raw, line, column)
    if unit.is_level and value <= 0:
        raise DomainError(f"{unit.value} value must be > 0, got {value}", line=line, column=column)
    if not unit.is_level and value <= -100:
        raise DomainError(f"percent change must be > -100, got {value}", line=line, column=column)
    return value


def parse_year(raw: str, line: int, column: int) -> int:
    cleaned = raw.strip()
    if not re.fullmatch(r"[0-9]{1,4}", cleaned):
        raise ParseError(f"not a year: {raw!r}", line=line, column=column)
    return int(cleaned)


def looks_numeric(raw: str) -> bool:
    try:
        float(raw.replace(",", ""))
    except ValueError:
        return False
    return True

