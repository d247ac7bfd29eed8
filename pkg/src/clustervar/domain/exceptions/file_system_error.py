"""File system error exception."""

from clustervar.domain.exceptions.domain_exception import DomainError


class FileSystemError(DomainError):
    """Raised when reading an input file or writing an output file fails."""
