"""Aligned plain-text rendering of output envelopes."""

import dataclasses
from typing import Any

from clustervar.application.dtos import OutputEnvelope


def render_table(envelope: OutputEnvelope) -> str:
    """Render the envelope result as aligned ``name  value`` lines.

    Nested objects are flattened into their fields, floats are rounded to six
    significant digits, and warnings are listed after the values.
    """
    rows = [("command", envelope.command), ("tool_version", envelope.tool_version)]
    if envelope.error is not None:
        rows.extend(envelope.error.items())
    else:
        rows.extend(_flatten(envelope.result))

    width = max(len(name) for name, _ in rows)
    lines = [f"{name.ljust(width)}  {format_cell(value)}" for name, value in rows]
    lines.extend(f"warning: {warning}" for warning in envelope.warnings)
    return "\n".join(lines) + "\n"


def format_cell(value: Any) -> str:
    """Format one value for display."""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _is_record(value: Any) -> bool:
    is_instance = dataclasses.is_dataclass(value) and not isinstance(value, type)
    return is_instance or isinstance(value, dict)


def _flatten(value: Any) -> list[tuple[str, Any]]:
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        items = [(f.name, getattr(value, f.name)) for f in dataclasses.fields(value)]
    elif isinstance(value, dict):
        items = list(value.items())
    else:
        return [("result", value)]

    rows: list[tuple[str, Any]] = []
    for name, item in items:
        if _is_record(item):
            rows.extend(_flatten(item))
        else:
            rows.append((name, item))
    return rows
