"""
Logging setup for the lab.

All module loggers hang below the ``kuratowski_lab`` logger, so one call to
:func:`setup_logging` configures the whole package. Records go to stderr;
stdout belongs to reports.
"""

import logging
import sys
from typing import Optional, Union

from .config_loader import LabConfig, load_lab_config
from .context import append_context
from .formatters import ContextFormatter, resolve_format

PACKAGE_LOGGER = 'kuratowski_lab'


def setup_logging(
    service_name: str = 'kuratowski-lab',
    log_level: Optional[Union[int, str]] = None,
    console_format: Optional[str] = None,
    enable_console: bool = True,
    config: Optional[LabConfig] = None,
    config_file: Optional[str] = None,
) -> logging.Logger:
    """
    Configure the package logger, with optional Sentry reporting.

    Args:
        service_name: Value of the ``service`` context field on every record
        log_level: Level name or number; defaults to the configured ``log_level``
        console_format: 'default', 'compact', 'verbose' or a literal format string
        enable_console: Attach a stderr handler
        config: Already loaded configuration; loaded from disk/env when omitted
        config_file: Explicit config path used when ``config`` is omitted

    Returns:
        The package logger
    """
    if config is None:
        config = load_lab_config(config_file)

    level = log_level if log_level is not None else config.log_level
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    append_context({'service': service_name})

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    logger.handlers.clear()
    logger.propagate = False

    if enable_console:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(ContextFormatter(resolve_format(console_format)))
        logger.addHandler(handler)

    sentry = config.sentry()
    if sentry:
        from .sentry_integration import setup_sentry

        setup_sentry(logger, sentry)

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger below the package logger.

    Args:
        name: Usually ``__name__``; a bare suffix such as ``'search'`` is prefixed

    Returns:
        Logger instance
    """
    if name == PACKAGE_LOGGER or name.startswith(PACKAGE_LOGGER + '.'):
        return logging.getLogger(name)
    return logging.getLogger(f'{PACKAGE_LOGGER}.{name}')
