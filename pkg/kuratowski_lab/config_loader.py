"""
Configuration file support for kuratowski_lab.

Caps, worker counts and the data directory can be set without touching code.
"""

import json
import os
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from .errors import ConfigError

DEFAULT_LOCATIONS = ('./lab_config.json', '~/.kuratowski_lab.json')

MAX_POINTS_CEILING = 10
FRAME_CAP_CEILING = 12


@dataclass
class LabConfig:
    log_level: str = 'WARNING'
    max_points: int = 8
    frame_cap: int = 8
    jobs: int = 1
    data_dir: Optional[str] = None
    sentry_dsn: Optional[str] = None
    sentry_environment: str = 'development'

    def validate(self) -> 'LabConfig':
        if not 1 <= self.max_points <= MAX_POINTS_CEILING:
            raise ConfigError(f'max_points must be in 1..{MAX_POINTS_CEILING}', max_points=self.max_points)
        if not 1 <= self.frame_cap <= FRAME_CAP_CEILING:
            raise ConfigError(f'frame_cap must be in 1..{FRAME_CAP_CEILING}', frame_cap=self.frame_cap)
        if self.jobs < 1:
            raise ConfigError('jobs must be at least 1', jobs=self.jobs)
        return self

    def sentry(self) -> Dict[str, Any]:
        return {'dsn': self.sentry_dsn, 'environment': self.sentry_environment} if self.sentry_dsn else {}

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def load_lab_config(config_path: Optional[str] = None) -> LabConfig:
    """
    Load the lab configuration from a file and environment variables.

    Looks for a file in this order:
    1. Explicit config_path parameter
    2. LAB_CONFIG_FILE environment variable
    3. ./lab_config.json (current directory)
    4. ~/.kuratowski_lab.json (home directory)

    Config file format (JSON):
    {
        "log_level": "INFO",
        "max_points": 8,
        "frame_cap": 8,
        "jobs": 4,
        "data_dir": "${LAB_GOLDEN}",
        "sentry": {"dsn": "${SENTRY_DSN}", "environment": "ci"}
    }

    Environment variables override the file:
    LAB_LOG_LEVEL, LAB_MAX_POINTS, LAB_FRAME_CAP, LAB_JOBS, LAB_DATA_DIR,
    SENTRY_DSN, SENTRY_ENVIRONMENT

    Returns:
        A validated LabConfig
    """
    raw: Dict[str, Any] = {}

    if config_path is None:
        config_path = os.getenv('LAB_CONFIG_FILE')
        if config_path is None:
            for candidate in DEFAULT_LOCATIONS:
                candidate = os.path.expanduser(candidate)
                if os.path.exists(candidate):
                    config_path = candidate
                    break

    if config_path:
        if not os.path.exists(config_path):
            raise ConfigError('config file not found', path=config_path)
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                raw = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f'malformed config file: {e}', path=config_path) from e
        raw = _expand_env_vars(raw)

    raw = _merge_env_vars(raw)
    return _build(raw).validate()


def _expand_env_vars(config: Any) -> Any:
    """Recursively expand ${VAR_NAME} references."""
    if isinstance(config, dict):
        return {k: _expand_env_vars(v) for k, v in config.items()}
    if isinstance(config, list):
        return [_expand_env_vars(item) for item in config]
    if isinstance(config, str) and config.startswith('${') and config.endswith('}'):
        return os.getenv(config[2:-1], config)
    return config


_ENV_KEYS = {
    'LAB_LOG_LEVEL': 'log_level',
    'LAB_MAX_POINTS': 'max_points',
    'LAB_FRAME_CAP': 'frame_cap',
    'LAB_JOBS': 'jobs',
    'LAB_DATA_DIR': 'data_dir',
}


def _merge_env_vars(config: Dict[str, Any]) -> Dict[str, Any]:
    config = dict(config)
    for env_name, key in _ENV_KEYS.items():
        value = os.getenv(env_name)
        if value:
            config[key] = value

    sentry = dict(config.get('sentry') or {})
    if os.getenv('SENTRY_DSN'):
        sentry['dsn'] = os.getenv('SENTRY_DSN')
    if os.getenv('SENTRY_ENVIRONMENT'):
        sentry['environment'] = os.getenv('SENTRY_ENVIRONMENT')
    config['sentry'] = sentry
    return config


def _as_int(raw: Dict[str, Any], key: str, default: int) -> int:
    value = raw.get(key, default)
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f'{key} must be an integer', value=value) from e


def _build(raw: Dict[str, Any]) -> LabConfig:
    defaults = LabConfig()
    sentry = raw.get('sentry') or {}
    dsn = sentry.get('dsn')
    # an unexpanded ${SENTRY_DSN} means the variable is unset
    if isinstance(dsn, str) and dsn.startswith('${'):
        dsn = None
    return LabConfig(
        log_level=str(raw.get('log_level', defaults.log_level)).upper(),
        max_points=_as_int(raw, 'max_points', defaults.max_points),
        frame_cap=_as_int(raw, 'frame_cap', defaults.frame_cap),
        jobs=_as_int(raw, 'jobs', defaults.jobs),
        data_dir=raw.get('data_dir') or None,
        sentry_dsn=dsn,
        sentry_environment=sentry.get('environment', defaults.sentry_environment),
    )
