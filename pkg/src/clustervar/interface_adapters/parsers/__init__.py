"""Parsers between raw bytes and domain records."""

from clustervar.interface_adapters.parsers.csv_units import (
    REQUIRED_COLUMNS,
    format_csv,
    parse_csv,
)

__all__ = ["REQUIRED_COLUMNS", "format_csv", "parse_csv"]
