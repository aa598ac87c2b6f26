"""
Bergman-style analysis of explicit Hasse diagrams.

A catalog is a list of named nodes and of edges tagged ``solid``, ``dotted`` or ``dashed``.
Solid edges are the covering relation; dotted and dashed edges annotate pairs ``(x, y)``
that were shown not to satisfy ``x <= y`` and are expected to be exactly the critical pairs.
Every computation runs per connected component of the solid edges.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .config import get_logger
from .errors import InputError, NotAHasseDiagram
from .posets import Poset, dual, from_covers, iter_bits

logger = get_logger(__name__)

EDGE_STYLES = ('solid', 'dotted', 'dashed')

Pair = Tuple[str, str]


@dataclass(frozen=True)
class DiagramCatalog:
    name: str
    nodes: Tuple[str, ...]
    edges: Tuple[Tuple[str, str, str], ...]
    alphabet: Tuple[str, ...] = ()

    @cached_property
    def position(self) -> Dict[str, int]:
        if len(set(self.nodes)) != len(self.nodes):
            dupes = sorted({n for n in self.nodes if self.nodes.count(n) > 1})
            raise NotAHasseDiagram('duplicate node names', catalog=self.name, nodes=dupes)
        return {name: k for k, name in enumerate(self.nodes)}

    @cached_property
    def solid(self) -> Tuple[Pair, ...]:
        return tuple((lo, hi) for lo, hi, style in self.edges if style == 'solid')

    @cached_property
    def annotated(self) -> Tuple[Pair, ...]:
        return tuple((lo, hi) for lo, hi, style in self.edges if style != 'solid')

    @cached_property
    def poset(self) -> Poset:
        """Order generated by the solid edges; they must be exactly its covers."""
        pos = self.position
        for lo, hi, style in self.edges:
            if style not in EDGE_STYLES:
                raise NotAHasseDiagram(f'unknown edge style {style!r}', catalog=self.name, edge=[lo, hi])
            for node in (lo, hi):
                if node not in pos:
                    raise NotAHasseDiagram(f'edge mentions unknown node {node!r}', catalog=self.name, edge=[lo, hi])
        pairs = [(pos[lo], pos[hi]) for lo, hi in self.solid]
        try:
            p = from_covers(len(self.nodes), pairs)
        except InputError as e:
            raise NotAHasseDiagram(f'solid edges do not form an order: {e.message}', catalog=self.name) from e
        redundant = sorted(set(pairs) - set(p.covers))
        if redundant:
            names = [[self.nodes[a], self.nodes[b]] for a, b in redundant]
            raise NotAHasseDiagram('solid edges implied by other edges', catalog=self.name, edges=names)
        return p

    @cached_property
    def components(self) -> Tuple[int, ...]:
        """Bitmask of each connected component, ordered by first node."""
        p = self.poset
        seen = 0
        out = []
        for start in range(p.size):
            if seen >> start & 1:
                continue
            comp = 0
            stack = [start]
            while stack:
                x = stack.pop()
                if comp >> x & 1:
                    continue
                comp |= 1 << x
                stack.extend(iter_bits((p.up[x] | p.down[x]) & ~comp))
            seen |= comp
            out.append(comp)
        return tuple(out)

    def component_of(self, node: str) -> int:
        bit = 1 << self.position[node]
        return next(c for c in self.components if c & bit)

    def names(self, mask: int) -> FrozenSet[str]:
        return frozenset(self.nodes[x] for x in iter_bits(mask))

    def leq(self, a: str, b: str) -> bool:
        return self.poset.leq(self.position[a], self.position[b])

    def without_edge(self, lo: str, hi: str) -> 'DiagramCatalog':
        kept = tuple(e for e in self.edges if (e[0], e[1]) != (lo, hi))
        return DiagramCatalog(self.name + '-edited', self.nodes, kept, self.alphabet)


def _join_irreducible_mask(p: Poset, components: Sequence[int]) -> int:
    mask = 0
    for comp in components:
        for x in iter_bits(comp):
            bounds = comp
            for d in iter_bits(p.strict_down(x)):
                bounds &= p.up[d]
            # x is the join of its strict down-set iff every upper bound of it lies above x
            if bounds & ~p.up[x]:
                mask |= 1 << x
    return mask


def join_irreducibles(d: DiagramCatalog) -> FrozenSet[str]:
    """Nodes that are not the join of other nodes of their component; a bottom is excluded."""
    return d.names(_join_irreducible_mask(d.poset, d.components))


def meet_irreducibles(d: DiagramCatalog) -> FrozenSet[str]:
    return d.names(_join_irreducible_mask(dual(d.poset), d.components))


def heuristic_join_irreducibles(d: DiagramCatalog) -> FrozenSet[str]:
    """Nodes with exactly one descending solid edge."""
    return frozenset(d.nodes[x] for x, lower in enumerate(d.poset.lower_covers) if len(lower) == 1)


def heuristic_meet_irreducibles(d: DiagramCatalog) -> FrozenSet[str]:
    uppers = [0] * len(d.nodes)
    for lo, _ in d.poset.covers:
        uppers[lo] += 1
    return frozenset(d.nodes[x] for x, count in enumerate(uppers) if count == 1)


def critical_pairs(d: DiagramCatalog) -> List[Pair]:
    """
    Pairs (x, y) with x minimal among join-irreducibles not below y and y maximal among
    meet-irreducibles not above x, inside one component.
    """
    p = d.poset
    join_mask = _join_irreducible_mask(p, d.components)
    meet_mask = _join_irreducible_mask(dual(p), d.components)
    out = []
    for comp in d.components:
        js = join_mask & comp
        ms = meet_mask & comp
        for x in iter_bits(js):
            not_above_x = ms & ~p.up[x]
            for y in iter_bits(not_above_x):
                not_below_y = js & ~p.down[y]
                x_minimal = not (p.strict_down(x) & not_below_y)
                y_maximal = not (p.strict_up(y) & not_above_x)
                if x_minimal and y_maximal:
                    out.append((d.nodes[x], d.nodes[y]))
    return sorted(out, key=lambda pair: (d.position[pair[0]], d.position[pair[1]]))


def classify_pair(d: DiagramCatalog, x: str, y: str) -> str:
    """
    Why a join-irreducible/meet-irreducible pair is or is not critical:
    ``'comparable'``, ``'critical'``, ``'not-minimal'``, ``'not-maximal'`` or ``'neither'``.
    """
    p = d.poset
    comp = d.component_of(x)
    js = _join_irreducible_mask(p, d.components) & comp
    ms = _join_irreducible_mask(dual(p), d.components) & comp
    a, b = d.position[x], d.position[y]
    if p.leq(a, b):
        return 'comparable'
    minimal = not (p.strict_down(a) & js & ~p.down[b])
    maximal = not (p.strict_up(b) & ms & ~p.up[a])
    if minimal and maximal:
        return 'critical'
    if maximal:
        return 'not-minimal'
    if minimal:
        return 'not-maximal'
    return 'neither'


def verify_catalog(
    d: DiagramCatalog,
    expected: Optional[Iterable[Sequence[str]]] = None,
    expected_join: Optional[Iterable[str]] = None,
    expected_meet: Optional[Iterable[str]] = None,
) -> Dict[str, Any]:
    """
    Compare computed critical pairs (and optionally irreducibles) with expectations.

    ``expected`` defaults to the catalog's dotted and dashed edges. An empty diff means verified.
    """
    computed = critical_pairs(d)
    wanted = [tuple(pair) for pair in (d.annotated if expected is None else expected)]
    computed_set, wanted_set = set(computed), set(wanted)
    report: Dict[str, Any] = {
        'catalog': d.name,
        'computed': [list(pair) for pair in computed],
        'missing': sorted(list(pair) for pair in wanted_set - computed_set),
        'unexpected': sorted(list(pair) for pair in computed_set - wanted_set),
    }
    if expected_join is not None:
        diff = join_irreducibles(d) ^ frozenset(expected_join)
        report['join_irreducible_diff'] = sorted(diff)
    if expected_meet is not None:
        diff = meet_irreducibles(d) ^ frozenset(expected_meet)
        report['meet_irreducible_diff'] = sorted(diff)
    report['verified'] = not any(
        report.get(key) for key in ('missing', 'unexpected', 'join_irreducible_diff', 'meet_irreducible_diff')
    )
    logger.info(f'{d.name}: {len(computed)} critical pairs, verified={report["verified"]}')
    return report
