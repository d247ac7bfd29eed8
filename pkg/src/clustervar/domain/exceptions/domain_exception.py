"""Base domain exception."""


class DomainError(Exception):
    """Base exception for all clustervar errors.

    Every input, design, or estimation failure inherits from this class so
    the command line can map the whole family to one exit status.
    """
