"""Command-line front end for qbrackets."""

__version__ = "0.1.0"
