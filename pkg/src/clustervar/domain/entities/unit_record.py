"""Unit record entity."""

import math
from dataclasses import dataclass

from clustervar.domain.exceptions import ValidationError


@dataclass(frozen=True, slots=True, kw_only=True)
class UnitRecord:
    """One experimental unit.

    Attributes:
        cluster_id: Opaque cluster key; no ordering is implied.
        w: Assignment, exactly 0 (control) or 1 (treatment).
        y: Observed outcome.
    """

    cluster_id: str
    w: int
    y: float

    def __post_init__(self) -> None:
        """Validate assignment and outcome."""
        # bool is an int subclass; True/False are not accepted as assignments
        if type(self.w) is not int or self.w not in (0, 1):
            raise ValidationError(f"Assignment must be 0 or 1, got {self.w!r}")
        if not math.isfinite(self.y):
            raise ValidationError(f"Outcome must be finite, got {self.y!r}")

    @property
    def is_treated(self) -> bool:
        """Whether the unit is in the treatment arm."""
        return self.w == 1
