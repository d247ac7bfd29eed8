"""File system infrastructure."""

from clustervar.infrastructure.files.local_file_store import LocalFileStore

__all__ = ["LocalFileStore"]
