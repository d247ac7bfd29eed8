"""Experiment source and sink abstract base classes."""

from abc import ABC, abstractmethod
from collections.abc import Sequence

from clustervar.domain.entities import UnitRecord


class IExperimentSource(ABC):
    """Abstract base class for loading unit records."""

    @abstractmethod
    def load(self, location: str) -> list[UnitRecord]:
        """Load unit records from a location.

        Args:
            location: Where the records live (a file path for CSV sources).

        Returns:
            Unit records in stored order.

        Raises:
            FileSystemError: If the location cannot be read.
            MalformedRowError: If a row cannot be parsed.
            MissingColumnError: If a required column is absent.
            EmptyFileError: If there is no header or no data.
        """
        ...  # pragma: no cover


class IExperimentSink(ABC):
    """Abstract base class for persisting unit records."""

    @abstractmethod
    def save(self, location: str, records: Sequence[UnitRecord]) -> None:
        """Write unit records to a location.

        Raises:
            FileSystemError: If the location cannot be written.
        """
        ...  # pragma: no cover
