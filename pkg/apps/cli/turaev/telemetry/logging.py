"""Logging configuration."""
import logging
import sys

from ..config import settings


def setup_logging(level: str | None = None) -> logging.Logger:
    """Configure logging for the application.

    Logs go to stderr; stdout carries the JSON payload of every command.
    """
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.StreamHandler(sys.stderr),
        ],
        force=True,
    )

    # Set log levels for specific modules
    logging.getLogger("networkx").setLevel(logging.WARNING)

    return logging.getLogger("turaev")
