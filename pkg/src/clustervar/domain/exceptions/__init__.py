"""Domain exceptions for clustervar."""

from clustervar.domain.exceptions.domain_exception import DomainError
from clustervar.domain.exceptions.estimation_error import (
    DegenerateArmError,
    EstimationError,
    InsufficientClustersError,
    SingularMatrixError,
)
from clustervar.domain.exceptions.experiment_design_error import (
    EmptyArmError,
    LengthMismatchError,
    MixedAssignmentClusterError,
)
from clustervar.domain.exceptions.file_system_error import FileSystemError
from clustervar.domain.exceptions.input_format_error import (
    EmptyFileError,
    MalformedRowError,
    MissingColumnError,
)
from clustervar.domain.exceptions.validation_error import ValidationError

__all__ = [
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
]
