"""Command-line interface for Jacobson Lab."""

from jacobson_lab.cli.main import create_parser, main

__all__ = ["create_parser", "main"]
