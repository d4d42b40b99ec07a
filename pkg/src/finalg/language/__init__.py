"""Input documents: syntax tree, parser and interpreter."""

from __future__ import annotations

from finalg.language.document import Document, Location, format_document
from finalg.language.interpreter import ExecutionReport, execute, render_json
from finalg.language.parser import parse_document

__all__ = [
    "Document",
    "ExecutionReport",
    "Location",
    "execute",
    "format_document",
    "parse_document",
    "render_json",
]
