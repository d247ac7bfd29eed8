"""Numerical estimation errors."""

from clustervar.domain.exceptions.domain_exception import DomainError


class EstimationError(DomainError):
    """Raised when an estimator's numerical preconditions do not hold."""


class SingularMatrixError(EstimationError):
    """Raised when inverting a 2x2 matrix with zero determinant."""


class InsufficientClustersError(EstimationError):
    """Raised when an arm has too few clusters for the requested moments.

    Attributes:
        arm: "treatment" or "control" (or "arm" when unknown).
        n_clusters: Clusters available.
        required: Clusters needed.
    """

    def __init__(self, arm: str, n_clusters: int, required: int) -> None:
        self.arm = arm
        self.n_clusters = n_clusters
        self.required = required
        super().__init__(
            f"The {arm} arm has {n_clusters} cluster(s); "
            f"sample moments need at least {required}"
        )


class DegenerateArmError(EstimationError):
    """Raised when an arm's mean cluster size is zero."""
