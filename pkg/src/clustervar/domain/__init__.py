"""Domain layer for clustervar."""

from clustervar.domain.entities import (
    ArmMoments,
    AteEstimate,
    ClusterAggregate,
    CoverageResult,
    UnitRecord,
    ValidatedExperiment,
    VarianceReport,
)
from clustervar.domain.exceptions import (
    DegenerateArmError,
    DomainError,
    EmptyArmError,
    EmptyFileError,
    EstimationError,
    FileSystemError,
    InsufficientClustersError,
    LengthMismatchError,
    MalformedRowError,
    MissingColumnError,
    MixedAssignmentClusterError,
    SingularMatrixError,
    ValidationError,
)
from clustervar.domain.value_objects import (
    AssignmentScheme,
    Matrix2,
    MomentMode,
    SimConfig,
)

__all__ = [
    # Entities
    "ArmMoments",
    "AteEstimate",
    "ClusterAggregate",
    "CoverageResult",
    "UnitRecord",
    "ValidatedExperiment",
    "VarianceReport",
    # Exceptions
    "DegenerateArmError",
    "DomainError",
    "EmptyArmError",
    "EmptyFileError",
    "EstimationError",
    "FileSystemError",
    "InsufficientClustersError",
    "LengthMismatchError",
    "MalformedRowError",
    "MissingColumnError",
    "MixedAssignmentClusterError",
    "SingularMatrixError",
    "ValidationError",
    # Value Objects
    "AssignmentScheme",
    "Matrix2",
    "MomentMode",
    "SimConfig",
]
