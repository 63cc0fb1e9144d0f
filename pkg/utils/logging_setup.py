"""
Logging configuration for the command line entry points.

Library modules only ever call logging.getLogger(__name__); this module is
the one place that installs handlers.
"""

import logging
from pathlib import Path
from typing import Optional

import coloredlogs

from config.settings import settings


LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> logging.Logger:
    """
    Install coloredlogs on the root logger.

    Args:
        level: Logging level name (defaults to settings.log_level)
        log_file: Optional file name written under settings.get_log_path()

    Returns:
        The configured root logger
    """
    level_name = (level or settings.log_level).upper()
    root = logging.getLogger()
    coloredlogs.install(level=level_name, fmt=LOG_FORMAT, logger=root)

    if log_file:
        path = Path(settings.get_log_path()) / log_file
        handler = logging.FileHandler(path, encoding="utf-8")
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler.setLevel(level_name)
        root.addHandler(handler)
        root.debug(f"Logging to file {path}")

    return root
