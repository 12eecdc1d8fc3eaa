"""Command-line interface."""

from src.cli.app import build_parser, dispatch, main

__all__ = ["build_parser", "dispatch", "main"]
