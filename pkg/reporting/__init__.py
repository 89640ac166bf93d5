# -*- coding: utf-8 -*-
"""Result writers."""

from reporting.writers import dumps_json, format_value, rows_to_csv, rows_to_xlsx, write_json

__all__ = ["dumps_json", "format_value", "rows_to_csv", "rows_to_xlsx", "write_json"]
