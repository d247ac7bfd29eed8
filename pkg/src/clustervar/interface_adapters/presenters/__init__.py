"""Presenters turning output envelopes into text."""

from clustervar.interface_adapters.presenters.json_presenter import (
    format_float,
    render_json,
)
from clustervar.interface_adapters.presenters.table_presenter import (
    format_cell,
    render_table,
)

__all__ = ["format_cell", "format_float", "render_json", "render_table"]
