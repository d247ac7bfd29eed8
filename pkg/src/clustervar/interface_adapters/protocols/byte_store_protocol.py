"""Protocol for stores that move raw bytes."""

from typing import Protocol


class IByteStore(Protocol):
    """Protocol for storage services that read and write raw documents.

    Lives in the interface adapters layer because it is the boundary
    between raw file content and CSV record mapping.
    """

    def read_bytes(self, location: str) -> bytes:
        """Return the full content at ``location``.

        Raises:
            FileSystemError: If the content cannot be read.
        """
        ...  # pragma: no cover

    def write_text(self, location: str, text: str) -> None:
        """Replace the content at ``location`` with UTF-8 ``text``.

        Raises:
            FileSystemError: If the content cannot be written.
        """
        ...  # pragma: no cover
