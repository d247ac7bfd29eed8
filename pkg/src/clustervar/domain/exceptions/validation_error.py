"""Validation error exception."""

from clustervar.domain.exceptions.domain_exception import DomainError


class ValidationError(DomainError):
    """Raised when input validation fails.

    Covers out-of-range parameters (confidence levels, tolerances, simulation
    settings) and serves as the parent of the input-format and
    experiment-design errors.
    """
