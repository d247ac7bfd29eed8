"""Output envelope data transfer object."""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True, slots=True, kw_only=True)
class OutputEnvelope:
    """Top-level document printed by every command in JSON format.

    Attributes:
        tool_version: Package version.
        command: Sub-command name.
        parameters: Every effective parameter, defaults included.
        result: Command payload (a DTO), or None on error.
        warnings: Non-fatal notes.
        metadata: Generator identity and methods, for simulation commands.
        error: Structured error (type and message), or None on success.
    """

    tool_version: str
    command: str
    parameters: dict[str, Any]
    result: Any
    warnings: tuple[str, ...] = field(default_factory=tuple)
    metadata: dict[str, str] = field(default_factory=dict)
    error: dict[str, str] | None = None
