"""JSON and text output."""

from .json_export import dumps, table_to_json
from .text_report import format_weight, render_report, render_table

__all__ = ["dumps", "table_to_json", "format_weight", "render_report", "render_table"]
