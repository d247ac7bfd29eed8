"""Experiment design errors."""

from clustervar.domain.exceptions.validation_error import ValidationError


class MixedAssignmentClusterError(ValidationError):
    """Raised when a cluster holds both treated and control units.

    Randomization happens at the cluster level, so every unit of a cluster
    must share one assignment.

    Attributes:
        cluster_id: The offending cluster.
    """

    def __init__(self, cluster_id: str) -> None:
        self.cluster_id = cluster_id
        super().__init__(
            f"Cluster '{cluster_id}' contains both treated and control units"
        )


class EmptyArmError(ValidationError):
    """Raised when the treatment or the control arm has no units.

    Attributes:
        arm: "treatment" or "control".
    """

    def __init__(self, arm: str) -> None:
        self.arm = arm
        super().__init__(f"The {arm} arm has no units")


class LengthMismatchError(ValidationError):
    """Raised when a per-unit vector does not align with the unit table."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected {expected} values, got {actual}")
