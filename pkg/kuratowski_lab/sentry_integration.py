"""
Optional Sentry reporting for long verification runs.
"""

import logging
from typing import Any, Dict

from .context import get_context


def _tag_with_context(event: Dict[str, Any], hint: Any) -> Dict[str, Any]:
    try:
        context = get_context()
        if context:
            tags = event.setdefault('tags', {})
            for key, value in context.items():
                if value is not None:
                    tags[key] = str(value)
            event.setdefault('contexts', {})['lab_context'] = context
    except Exception:
        pass
    return event


def setup_sentry(logger: logging.Logger, sentry_config: Dict[str, Any]) -> bool:
    """
    Initialise Sentry so failed verifications arrive tagged with the search context.

    Args:
        logger: Package logger, used to report setup problems
        sentry_config: Mapping with ``dsn`` and optional ``environment``,
            ``event_level`` and ``breadcrumb_level``

    Returns:
        True if Sentry was initialised by this call
    """
    dsn = sentry_config.get('dsn')
    if not dsn:
        return False

    try:
        import sentry_sdk
        from sentry_sdk.integrations.logging import LoggingIntegration
    except ImportError:
        logger.warning('Sentry DSN configured but sentry-sdk is not installed: pip install "kuratowski-lab[sentry]"')
        return False

    if sentry_sdk.Hub.current.client:
        return False

    environment = sentry_config.get('environment', 'development')
    try:
        sentry_sdk.init(
            dsn=dsn,
            environment=environment,
            traces_sample_rate=0.0,
            before_send=_tag_with_context,
            integrations=[
                LoggingIntegration(
                    level=sentry_config.get('breadcrumb_level', logging.INFO),
                    event_level=sentry_config.get('event_level', logging.ERROR),
                ),
            ],
        )
    except Exception as e:
        logger.warning(f'Failed to configure Sentry: {e}')
        return False

    logger.info('Sentry reporting enabled', extra={'sentry_environment': environment})
    return True
