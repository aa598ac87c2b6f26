"""
Checked-in golden data: figure transcriptions and expected counts.

Files live in the package ``data`` directory. ``LAB_DATA_DIR`` (or the ``data_dir``
config setting, applied through :func:`set_data_dir`) points reads at another directory.
"""

import json
import os
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple

from .diagrams import DiagramCatalog
from .errors import ConfigError

PACKAGE_DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

DIAGRAM_CATALOGS = ('fig2', 'fig3_upper', 'fig3_lower')

_data_dir: Optional[str] = None


def set_data_dir(path: Optional[str]) -> None:
    """Redirect golden-file reads; None restores the default lookup."""
    global _data_dir
    _data_dir = path
    load_json.cache_clear()


def data_dir() -> str:
    return _data_dir or os.getenv('LAB_DATA_DIR') or PACKAGE_DATA


def data_path(name: str) -> str:
    return os.path.join(data_dir(), f'{name}.json')


@lru_cache(maxsize=None)
def load_json(name: str) -> Dict[str, Any]:
    path = data_path(name)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise ConfigError(f'data file {name}.json not found', path=path) from e
    except json.JSONDecodeError as e:
        raise ConfigError(f'malformed data file {name}.json: {e}', path=path) from e


def load_kuratowski_boxes() -> Dict[str, Any]:
    return load_json('kuratowski_boxes')


def load_catalog(name: str) -> DiagramCatalog:
    """One of the Hasse-diagram catalogs: ``fig2``, ``fig3_upper`` or ``fig3_lower``."""
    if name not in DIAGRAM_CATALOGS:
        raise ConfigError(f'unknown catalog {name!r}', choices=list(DIAGRAM_CATALOGS))
    data = load_json(name)
    nodes = tuple(node for comp in data['components'] for node in comp['nodes'])
    edges = tuple((lo, hi, style) for lo, hi, style in data['edges'])
    return DiagramCatalog(data['name'], nodes, edges, tuple(data.get('alphabet', ())))


def expected_irreducibles(name: str) -> Tuple[Optional[FrozenSet[str]], Optional[FrozenSet[str]]]:
    """Join- and meet-irreducibles recorded with a catalog, or None where not recorded."""
    components = load_json(name)['components']
    if not all('join_irreducibles' in comp for comp in components):
        return None, None
    join = frozenset(node for comp in components for node in comp['join_irreducibles'])
    meet = frozenset(node for comp in components for node in comp['meet_irreducibles'])
    return join, meet


def load_fig5() -> Dict[Tuple[int, int], Set[Tuple[str, str]]]:
    """Covering pairs of the C(m,n) Hasse diagrams, keyed by (m, n)."""
    data = load_json('fig5')
    slots = {slot: k for k, slot in enumerate(data['hexagon_slots'])}
    panels: Dict[Tuple[int, int], Set[Tuple[str, str]]] = {}
    for panel in data['panels']:
        edges = {(lo, hi) for lo, hi in panel['edges']}
        for hexagon in panel['hexagons']:
            edges |= {(hexagon[slots[lo]], hexagon[slots[hi]]) for lo, hi in data['hexagon']}
        panels[(panel['m'], panel['n'])] = edges
    return panels


def load_fig6() -> Dict[str, Any]:
    return load_json('fig6')


def load_table1() -> Dict[str, Any]:
    return load_json('table1')


def load_fig7() -> Dict[str, Any]:
    return load_json('fig7')


def expected_collapse_count(m: int, n: int) -> Optional[int]:
    return load_fig7()['expected_counts'].get(f'{m},{n}')


def fig7_nodes() -> List[Dict[str, Any]]:
    return list(load_fig7()['nodes'])
