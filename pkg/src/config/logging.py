"""Logging setup shared by the CLI and the check runner."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "qbrackets"


def configure_logging(level: str = "WARNING") -> None:
    """Install one RichHandler on the root logger, writing to stderr.

    Calling it again only changes the level.
    """
    root = logging.getLogger()
    root.setLevel(level.upper())
    if any(getattr(h, "name", None) == _HANDLER_NAME for h in root.handlers):
        return
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
