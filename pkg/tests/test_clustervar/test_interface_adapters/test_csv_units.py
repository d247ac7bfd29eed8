"""Tests for the unit-record CSV codec."""

import io

import pytest

from clustervar.domain.entities import UnitRecord
from clustervar.domain.exceptions import (
    EmptyFileError,
    MalformedRowError,
    MissingColumnError,
    ValidationError,
)
from clustervar.interface_adapters.parsers import format_csv, parse_csv
from tests.test_clustervar.builders import reference_records


def _parse(text: str) -> list[UnitRecord]:
    return parse_csv(io.BytesIO(text.encode("utf-8")))


# --- Parsing ---


def test_parse_csv_basic() -> None:
    """Should read one record per data row."""
    records = _parse("cluster_id,w,y\ng1,1,1\ng1,1,0\ng3,0,0.5\n")
    assert records == [
        UnitRecord(cluster_id="g1", w=1, y=1.0),
        UnitRecord(cluster_id="g1", w=1, y=0.0),
        UnitRecord(cluster_id="g3", w=0, y=0.5),
    ]


def test_parse_csv_crlf_and_missing_final_newline() -> None:
    """Should accept CRLF line endings and no trailing newline."""
    records = _parse("cluster_id,w,y\r\na,1,2\r\nb,0,3")
    assert [r.y for r in records] == [2.0, 3.0]


def test_parse_csv_reordered_and_extra_columns() -> None:
    """Should locate required columns by name and ignore extra ones."""
    records = _parse("y,note,w,cluster_id\n1.5,x,1,a\n-2e-3,y,0,b\n")
    assert records == [
        UnitRecord(cluster_id="a", w=1, y=1.5),
        UnitRecord(cluster_id="b", w=0, y=-0.002),
    ]


def test_parse_csv_skips_blank_lines() -> None:
    """Should ignore empty lines between rows."""
    assert len(_parse("cluster_id,w,y\n\na,1,1\n\nb,0,0\n\n")) == 2


def test_parse_csv_tolerates_byte_order_mark() -> None:
    """Should strip a leading UTF-8 BOM."""
    data = "\ufeffcluster_id,w,y\na,1,1\nb,0,0\n".encode()
    assert len(parse_csv(io.BytesIO(data))) == 2


def test_parse_csv_keeps_cluster_ids_verbatim() -> None:
    """Should treat cluster ids as opaque strings."""
    records = _parse("cluster_id,w,y\n007,1,1\n7,0,0\n")
    assert [r.cluster_id for r in records] == ["007", "7"]


@pytest.mark.parametrize("value", ["1", "-1", "+1.5", ".5", "5.", "1e3", "1E-3"])
def test_parse_csv_accepts_decimal_numbers(value: str) -> None:
    """Should accept plain decimal and exponent notation."""
    records = _parse(f"cluster_id,w,y\na,1,{value}\nb,0,0\n")
    assert records[0].y == float(value)


# --- Errors ---


def test_parse_csv_reports_line_of_bad_assignment() -> None:
    """Should report the 1-based line number of the offending row."""
    with pytest.raises(MalformedRowError) as exc_info:
        _parse("cluster_id,w,y\na,2,1\n")
    assert exc_info.value.line_number == 2
    assert "w must be 0 or 1" in exc_info.value.reason


@pytest.mark.parametrize("w", ["1.0", "true", " 1", ""])
def test_parse_csv_rejects_non_literal_assignment(w: str) -> None:
    """Should accept only the literals 0 and 1 for w."""
    with pytest.raises(MalformedRowError, match="w must be 0 or 1"):
        _parse(f"cluster_id,w,y\na,{w},1\n")


@pytest.mark.parametrize("y", ["nan", "inf", "-inf", "abc", "", "1,5", "0x10", "1e999"])
def test_parse_csv_rejects_bad_outcome(y: str) -> None:
    """Should reject outcomes that are not finite decimal numbers."""
    with pytest.raises(MalformedRowError):
        _parse(f"cluster_id,w,y\na,1,{y}\n")


def test_parse_csv_rejects_quoted_fields() -> None:
    """Should reject quoted fields."""
    with pytest.raises(MalformedRowError, match="quoted"):
        _parse('cluster_id,w,y\n"a",1,1\n')


def test_parse_csv_rejects_wrong_field_count() -> None:
    """Should reject rows with too many or too few fields."""
    with pytest.raises(MalformedRowError, match="expected 3 fields, found 2"):
        _parse("cluster_id,w,y\na,1\n")


def test_parse_csv_rejects_empty_cluster_id() -> None:
    """Should reject an empty cluster id."""
    with pytest.raises(MalformedRowError, match="empty cluster_id"):
        _parse("cluster_id,w,y\n,1,1\n")


def test_parse_csv_rejects_invalid_utf8() -> None:
    """Should report undecodable bytes as a malformed row."""
    data = b"cluster_id,w,y\na,1,1\n\xff,0,0\n"
    with pytest.raises(MalformedRowError) as exc_info:
        parse_csv(io.BytesIO(data))
    assert exc_info.value.line_number == 3


def test_parse_csv_rejects_duplicate_columns() -> None:
    """Should reject a header that names a column twice."""
    with pytest.raises(MalformedRowError, match="duplicate"):
        _parse("cluster_id,w,y,w\na,1,1,1\n")


@pytest.mark.parametrize("column", ["cluster_id", "w", "y"])
def test_parse_csv_missing_column(column: str) -> None:
    """Should name the missing required column."""
    header = ",".join(c for c in ("cluster_id", "w", "y") if c != column)
    with pytest.raises(MissingColumnError) as exc_info:
        _parse(header + "\n")
    assert exc_info.value.column == column


@pytest.mark.parametrize("text", ["", "\n\n", "cluster_id,w,y\n", "cluster_id,w,y"])
def test_parse_csv_empty_file(text: str) -> None:
    """Should raise EmptyFileError without a header or data rows."""
    with pytest.raises(EmptyFileError):
        _parse(text)


# --- Formatting ---


def test_format_csv_round_trips_reference_records() -> None:
    """Should write records that parse back unchanged."""
    records = reference_records() + [UnitRecord(cluster_id="z", w=0, y=0.1)]
    text = format_csv(records)
    assert text.startswith("cluster_id,w,y\ng1,1,1.0\n")
    assert text.endswith("\n")
    assert _parse(text) == records


def test_format_csv_rejects_unwritable_cluster_id() -> None:
    """Should refuse ids that would need quoting."""
    with pytest.raises(ValidationError, match="quoting"):
        format_csv([UnitRecord(cluster_id="a,b", w=1, y=1.0)])
