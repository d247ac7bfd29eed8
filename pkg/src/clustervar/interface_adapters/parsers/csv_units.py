"""CSV codec for unit records.

Format: UTF-8 text, LF or CRLF line endings, a header naming at least the
columns cluster_id, w, y in any order (extra columns are ignored), then one
unit per row. Quoting is not supported. ``w`` is the literal 0 or 1 and ``y``
is a finite decimal number.
"""

import re
from collections.abc import Sequence
from typing import BinaryIO

from clustervar.domain.entities import UnitRecord
from clustervar.domain.exceptions import (
    EmptyFileError,
    MalformedRowError,
    MissingColumnError,
    ValidationError,
)

REQUIRED_COLUMNS = ("cluster_id", "w", "y")
_NUMBER_PATTERN = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_ASSIGNMENTS = {"0": 0, "1": 1}


def parse_csv(stream: BinaryIO) -> list[UnitRecord]:
    """Parse unit records from a byte stream.

    Args:
        stream: Readable binary stream holding the CSV document.

    Returns:
        One UnitRecord per data row, in file order.

    Raises:
        EmptyFileError: If there is no header or no data row.
        MissingColumnError: If cluster_id, w, or y is absent from the header.
        MalformedRowError: For quoted fields, wrong field counts, an empty
            cluster id, w outside {0, 1}, or an unparseable or non-finite y.
    """
    lines = _decode_lines(stream.read())
    numbered = [(number, line) for number, line in enumerate(lines, start=1) if line]
    if not numbered:
        raise EmptyFileError("Input has no header row")

    header_number, header_line = numbered[0]
    columns = _split(header_number, header_line)
    if len(set(columns)) != len(columns):
        raise MalformedRowError(header_number, "duplicate column names in header")
    for column in REQUIRED_COLUMNS:
        if column not in columns:
            raise MissingColumnError(column)
    cluster_col, w_col, y_col = (columns.index(name) for name in REQUIRED_COLUMNS)

    records = []
    for number, line in numbered[1:]:
        fields = _split(number, line)
        if len(fields) != len(columns):
            raise MalformedRowError(
                number, f"expected {len(columns)} fields, found {len(fields)}"
            )
        records.append(
            UnitRecord(
                cluster_id=_parse_cluster_id(number, fields[cluster_col]),
                w=_parse_assignment(number, fields[w_col]),
                y=_parse_outcome(number, fields[y_col]),
            )
        )

    if not records:
        raise EmptyFileError("Input has a header but no data rows")
    return records


def format_csv(records: Sequence[UnitRecord]) -> str:
    """Render unit records in the format read by ``parse_csv``.

    Outcomes are written with ``repr`` so they parse back to the same float.

    Raises:
        ValidationError: If a cluster id cannot be written unquoted.
    """
    rows = [",".join(REQUIRED_COLUMNS)]
    for record in records:
        if not _is_plain_field(record.cluster_id) or not record.cluster_id:
            raise ValidationError(
                f"Cluster id {record.cluster_id!r} cannot be written without quoting"
            )
        rows.append(f"{record.cluster_id},{record.w},{record.y!r}")
    return "\n".join(rows) + "\n"


def _decode_lines(data: bytes) -> list[str]:
    """Decode UTF-8 (BOM tolerated) and split into lines without terminators."""
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        line_number = data.count(b"\n", 0, e.start) + 1
        raise MalformedRowError(line_number, "invalid UTF-8") from e
    return [line.removesuffix("\r") for line in text.split("\n")]


def _split(number: int, line: str) -> list[str]:
    if '"' in line:
        raise MalformedRowError(number, "quoted fields are not supported")
    if "\r" in line:
        raise MalformedRowError(number, "stray carriage return")
    return line.split(",")


def _is_plain_field(value: str) -> bool:
    return not any(char in value for char in ',"\r\n')


def _parse_cluster_id(number: int, value: str) -> str:
    if not value:
        raise MalformedRowError(number, "empty cluster_id")
    return value


def _parse_assignment(number: int, value: str) -> int:
    try:
        return _ASSIGNMENTS[value]
    except KeyError:
        raise MalformedRowError(number, f"w must be 0 or 1, got {value!r}") from None


def _parse_outcome(number: int, value: str) -> float:
    if not _NUMBER_PATTERN.fullmatch(value):
        raise MalformedRowError(number, f"y is not a number: {value!r}")
    y = float(value)
    if y in (float("inf"), float("-inf")):
        raise MalformedRowError(number, f"y is not finite: {value!r}")
    return y
