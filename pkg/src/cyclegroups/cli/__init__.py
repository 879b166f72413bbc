"""Command-line interface: group expressions, verification suites, entry point."""

from .main import main

__all__ = ["main"]
