"""
Context storage for log records.

Searches tag their log lines with the parameters and sizes they are working on.
The context lives in a contextvar so concurrent tasks never see each other's fields.
"""

import contextvars
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

_context_var: contextvars.ContextVar[Optional[Dict[str, Any]]] = contextvars.ContextVar('lab_context', default=None)


def set_context(context: Optional[Dict[str, Any]]) -> None:
    """Replace the current context."""
    _context_var.set(context)


def get_context() -> Optional[Dict[str, Any]]:
    """
    Get the current context.

    Returns:
        The context dictionary, or None if nothing was set
    """
    return _context_var.get()


def append_context(context: Dict[str, Any]) -> None:
    """
    Merge new fields into the current context.

    Args:
        context: Fields to add; existing keys are overwritten
    """
    current = get_context()
    merged = dict(current) if current else {}
    merged.update(context)
    _context_var.set(merged)


def clear_context() -> None:
    _context_var.set(None)


def context_snapshot() -> Dict[str, Any]:
    """Copy of the current context, safe to pickle into a worker process."""
    return dict(get_context() or {})


@contextmanager
def log_context(**kwargs: Any) -> Iterator[None]:
    """
    Add fields to the context for the duration of a block.

    Usage:
        with log_context(params='3,3', points=5):
            logger.info('level done')

    Args:
        **kwargs: Fields to add
    """
    previous = get_context()
    set_context({**previous, **kwargs} if previous else dict(kwargs))
    try:
        yield
    finally:
        set_context(previous)
