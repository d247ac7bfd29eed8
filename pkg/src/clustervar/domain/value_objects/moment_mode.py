"""Moment mode enumeration."""

from enum import Enum

from clustervar.domain.exceptions import ValidationError


class MomentMode(Enum):
    """Divisor convention for second moments over clusters.

    Attributes:
        POPULATION: Divide by the number of clusters n. Reproduces the
            cluster-robust sandwich exactly.
        SAMPLE: Divide by n - 1 (Bessel correction), applied per arm.
    """

    POPULATION = "population"
    SAMPLE = "sample"

    @classmethod
    def from_string(cls, value: str) -> "MomentMode":
        """Parse a mode name case-insensitively.

        Raises:
            ValidationError: If the name is not a known mode.
        """
        try:
            return cls(value.strip().lower())
        except ValueError:
            valid = ", ".join(mode.value for mode in cls)
            raise ValidationError(
                f"Invalid moment mode: '{value}'. Valid modes are: {valid}"
            ) from None

    def divisor(self, n_clusters: int) -> int:
        """Return the divisor applied to centered sums of squares."""
        if self is MomentMode.POPULATION:
            return n_clusters
        return n_clusters - 1

    @property
    def min_clusters(self) -> int:
        """Smallest cluster count for which the divisor is positive."""
        return 1 if self is MomentMode.POPULATION else 2
