"""Entry point for running typegraph as a module."""
from typegraph.cli import cli

if __name__ == "__main__":
    cli()
