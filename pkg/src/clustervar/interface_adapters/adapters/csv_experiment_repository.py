"""CSV experiment repository adapter."""

import io
from collections.abc import Sequence

from clustervar.application.interfaces import IExperimentSink, IExperimentSource
from clustervar.domain.entities import UnitRecord
from clustervar.interface_adapters.parsers import format_csv, parse_csv
from clustervar.interface_adapters.protocols import IByteStore


class CsvExperimentRepository(IExperimentSource, IExperimentSink):
    """Loads and saves unit records as CSV documents.

    Raw bytes come from an IByteStore (e.g., LocalFileStore); this adapter
    owns the mapping between those bytes and UnitRecord entities.
    """

    def __init__(self, byte_store: IByteStore) -> None:
        """Initialize the repository.

        Args:
            byte_store: Underlying raw document store.
        """
        self._byte_store = byte_store

    def load(self, location: str) -> list[UnitRecord]:
        """Parse the CSV document at ``location`` into unit records."""
        return parse_csv(io.BytesIO(self._byte_store.read_bytes(location)))

    def save(self, location: str, records: Sequence[UnitRecord]) -> None:
        """Write ``records`` as a CSV document to ``location``."""
        self._byte_store.write_text(location, format_csv(records))
