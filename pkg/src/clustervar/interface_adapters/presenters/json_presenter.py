"""JSON rendering of output envelopes.

Key order follows dataclass field order and dict insertion order, and floats
are printed with 17 significant digits, so identical inputs always render to
identical bytes and every float parses back to the same value.
"""

import dataclasses
import json
import math
from enum import Enum
from typing import Any

from clustervar.application.dtos import OutputEnvelope

_INDENT = "  "


def render_json(envelope: OutputEnvelope) -> str:
    """Render an envelope as an indented JSON document with a trailing newline."""
    return _encode(envelope, 0) + "\n"


def format_float(value: float) -> str:
    """Format a float with 17 significant digits as a JSON number.

    Non-finite values become null.
    """
    if not math.isfinite(value):
        return "null"
    text = format(value, ".17g")
    if not any(char in text for char in ".e"):
        text += ".0"
    return text


def _encode(value: Any, level: int) -> str:
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, Enum):
        return _encode(value.value, level)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        items = [(f.name, getattr(value, f.name)) for f in dataclasses.fields(value)]
        return _encode_object(items, level)
    if isinstance(value, dict):
        return _encode_object([(str(k), v) for k, v in value.items()], level)
    if isinstance(value, (list, tuple)):
        return _encode_array(list(value), level)
    raise TypeError(f"Cannot encode {type(value).__name__} as JSON")


def _encode_object(items: list[tuple[str, Any]], level: int) -> str:
    if not items:
        return "{}"
    inner = _INDENT * (level + 1)
    body = ",\n".join(
        f"{inner}{json.dumps(key)}: {_encode(item, level + 1)}" for key, item in items
    )
    return "{\n" + body + "\n" + _INDENT * level + "}"


def _encode_array(values: list[Any], level: int) -> str:
    if not values:
        return "[]"
    inner = _INDENT * (level + 1)
    body = ",\n".join(f"{inner}{_encode(item, level + 1)}" for item in values)
    return "[\n" + body + "\n" + _INDENT * level + "]"
