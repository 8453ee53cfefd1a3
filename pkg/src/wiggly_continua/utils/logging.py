"""Logging utilities for wiggly-continua.

Every module logs through a ``wiggly-continua.<area>`` logger; this module
installs the single stream handler they share.
"""

import logging

PACKAGE_LOGGERS = [
    "wiggly-continua",
    "wiggly-continua.geometry",
    "wiggly-continua.multiscale",
    "wiggly-continua.corona",
    "wiggly-continua.dimension",
    "wiggly-continua.generators",
    "wiggly-continua.formats",
    "wiggly-continua.commands",
]


def setup_logging(level: int = logging.WARNING) -> logging.Logger:
    """
    Configure wiggly-continua logging.

    Args:
        level: The minimum logging level to display (default: WARNING)

    Returns:
        The configured logger instance
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers to prevent duplication
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler()
    formatter = logging.Formatter("%(levelname)s - %(name)s - %(message)s")
    handler.setFormatter(formatter)
    root_logger.addHandler(handler)

    for logger_name in PACKAGE_LOGGERS:
        logger = logging.getLogger(logger_name)
        logger.setLevel(level)

    return logging.getLogger("wiggly-continua")


def log_config_param(
    logger: logging.Logger,
    section: str,
    param: str,
    value: object | None,
) -> None:
    """Logs a resolved configuration parameter.

    Args:
        logger: The logger to use
        section: The configuration section (geometry, corona, ...)
        param: The parameter name
        value: The parameter value
    """
    display_value = "Not Provided" if value is None else value
    logger.info(f"{section} {param}: {display_value}")
