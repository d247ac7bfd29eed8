"""Local file system byte store."""

import logging
from pathlib import Path

from clustervar.domain.exceptions import FileSystemError

logger = logging.getLogger(__name__)


class LocalFileStore:
    """Reads and writes documents on the local file system.

    Implements IByteStore. OS-level failures are re-raised as
    FileSystemError so callers only handle domain exceptions.
    """

    def read_bytes(self, location: str) -> bytes:
        """Return the content of the file at ``location``.

        Raises:
            FileSystemError: If the file is missing or unreadable.
        """
        path = Path(location)
        try:
            data = path.read_bytes()
        except OSError as e:
            raise FileSystemError(f"Cannot read '{location}': {e.strerror or e}") from e
        logger.debug("Read %d bytes from %s", len(data), path)
        return data

    def write_text(self, location: str, text: str) -> None:
        """Write UTF-8 ``text`` to ``location`` with LF line endings.

        Raises:
            FileSystemError: If the file cannot be written.
        """
        path = Path(location)
        try:
            with path.open("w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
        except OSError as e:
            message = f"Cannot write '{location}': {e.strerror or e}"
            raise FileSystemError(message) from e
        logger.debug("Wrote %d characters to %s", len(text), path)
