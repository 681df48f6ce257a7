"""
Main entry point for running Centrex as a module.

This allows the package to be executed directly with:
python -m centrex
"""

from centrex.main import app


def main() -> None:
    """Run the Centrex CLI entrypoint."""
    app()


if __name__ == "__main__":
    main()
