"""
Report serialisation: canonical JSON, DOT graphs, and size-capped log summaries.
"""

import json
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

# Caps for values rendered into log lines
MAX_STRING_LENGTH = 200
MAX_LIST_ITEMS = 12
MAX_DICT_ITEMS = 24


def summarize(value: Any, depth: int = 0) -> Any:
    """
    Shrink a value for logging: long strings, lists and dicts are truncated.

    Args:
        value: Any JSON-like value (tuples are treated as lists)
        depth: Current nesting depth; below depth 3 containers collapse to a size marker

    Returns:
        A value that is cheap to format
    """
    if isinstance(value, str):
        if len(value) > MAX_STRING_LENGTH:
            return value[:MAX_STRING_LENGTH] + f'...[{len(value)} chars]'
        return value
    if isinstance(value, bytes):
        return value.hex()
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else list(value)
        if depth >= 3:
            return f'[{len(items)} items]'
        out: List[Any] = [summarize(v, depth + 1) for v in items[:MAX_LIST_ITEMS]]
        if len(items) > MAX_LIST_ITEMS:
            out.append(f'... {len(items) - MAX_LIST_ITEMS} more')
        return out
    if isinstance(value, dict):
        if depth >= 3:
            return f'{{{len(value)} keys}}'
        keys = list(value)[:MAX_DICT_ITEMS]
        out_dict = {str(k): summarize(value[k], depth + 1) for k in keys}
        if len(value) > MAX_DICT_ITEMS:
            out_dict['_truncated'] = f'{len(value) - MAX_DICT_ITEMS} more keys'
        return out_dict
    return value


def _plain(value: Any) -> Any:
    if isinstance(value, bytes):
        return value.hex()
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, list):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def dump_json(obj: Any, indent: Optional[int] = 2) -> str:
    """Canonical JSON: sorted keys, sets sorted, tuples as lists, bytes as hex."""
    return json.dumps(_plain(obj), indent=indent, sort_keys=True, ensure_ascii=False)


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def dot_graph(
    nodes: Sequence[str],
    edges: Iterable[Tuple[str, str]],
    name: str = 'hasse',
    styles: Optional[Dict[Tuple[str, str], str]] = None,
    bold: Iterable[str] = (),
) -> str:
    """
    Render a Hasse diagram for graphviz, smaller elements at the bottom.

    Args:
        nodes: Node labels; an empty label is drawn as ``id``
        edges: (lower, upper) pairs
        name: Graph name
        styles: Optional edge style per pair ('solid', 'dotted', 'dashed')
        bold: Nodes drawn with a bold outline

    Returns:
        DOT source
    """
    styles = styles or {}
    bold_set = set(bold)
    lines = [f'digraph {_quote(name)} {{', '\trankdir=BT;', '\tnode [shape=plaintext];']
    for node in nodes:
        attrs = [f'label={_quote(node or "id")}']
        if node in bold_set:
            attrs.append('fontname="bold"')
        lines.append(f'\t{_quote(node)} [{", ".join(attrs)}];')
    for lo, hi in edges:
        style = styles.get((lo, hi), 'solid')
        lines.append(f'\t{_quote(lo)} -> {_quote(hi)} [dir=none, style={style}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
