"""Command-line package initialization."""

from cli.commands import run, build_parser, render_table

__all__ = ["run", "build_parser", "render_table"]
