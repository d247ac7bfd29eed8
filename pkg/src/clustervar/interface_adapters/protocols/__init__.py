"""Protocols for the interface adapters layer."""

from clustervar.interface_adapters.protocols.byte_store_protocol import IByteStore

__all__ = ["IByteStore"]
