"""Cluster assignment scheme enumeration."""

from enum import Enum

from clustervar.domain.exceptions import ValidationError


class AssignmentScheme(Enum):
    """How simulated clusters are assigned to arms.

    Attributes:
        ALTERNATING: Control, treatment, control, ... by cluster index.
        BERNOULLI_HALF: Independent fair coin per cluster.
    """

    ALTERNATING = "alternating"
    BERNOULLI_HALF = "bernoulli_half"

    @classmethod
    def from_string(cls, value: str) -> "AssignmentScheme":
        """Parse a scheme name; "bernoulli" is accepted for BERNOULLI_HALF.

        Raises:
            ValidationError: If the name is not a known scheme.
        """
        normalized = value.strip().lower()
        normalized = {"bernoulli": "bernoulli_half"}.get(normalized, normalized)
        try:
            return cls(normalized)
        except ValueError:
            raise ValidationError(
                f"Invalid assignment scheme: '{value}'. "
                f"Valid schemes are: alternating, bernoulli"
            ) from None
