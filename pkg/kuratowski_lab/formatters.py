"""
Log formatters that render the lab context into every record.
"""

import logging
from typing import Optional

from .context import get_context


class ContextFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        context = get_context()
        parts = []
        if context:
            for key, value in context.items():
                if not hasattr(record, key):
                    setattr(record, key, value)
                parts.append(f'{key}={value}')
        record.context_str = f'[{", ".join(parts)}]' if parts else '[-]'
        return super().format(record)


def get_default_format() -> str:
    return '%(asctime)s - %(name)s - %(levelname)s - %(context_str)s - %(message)s'


def get_compact_format() -> str:
    return '%(asctime)s - %(levelname)s - %(context_str)s - %(message)s'


def get_verbose_format() -> str:
    return (
        '%(asctime)s - %(name)s - %(levelname)s - '
        '%(context_str)s - '
        '%(processName)s %(module)s.%(funcName)s:%(lineno)d - '
        '%(message)s'
    )


FORMATS = {
    'default': get_default_format,
    'compact': get_compact_format,
    'verbose': get_verbose_format,
}


def resolve_format(name: Optional[str]) -> str:
    """Map a format name (or a literal format string) to a format string."""
    if not name:
        return get_default_format()
    if name in FORMATS:
        return FORMATS[name]()
    return name
