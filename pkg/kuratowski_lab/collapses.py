"""
Collapses of C(m, n) realised by concrete instances, and the searches over them.

An instance is a poset with monotone ``s <= t``, ``s^m = s`` and ``t^n = t``. Its collapse
is the set of pairs of W(m, n) words that induce the same map. Searches walk every poset
up to a size bound (one isomorphism class at a time) and every admissible ``(s, t)``,
keeping the least witness per collapse.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .catalogs import fig7_nodes, load_fig6, load_table1
from .chittenden import (
    Params,
    embeds,
    multiplication_table,
    normal_form,
    order_poset,
    windex,
    word_length_parity,
    wset,
)
from .config import get_logger
from .context import log_context
from .diagrams import DiagramCatalog
from .errors import BudgetExceeded, NotDominated, NotMonotone, NotPeriodic, ParamMismatch, VerificationError
from .monoid import evaluate
from .parallel import run_tasks
from .posets import (
    EndoMap,
    Poset,
    check_map,
    enumerate_monotone_endomaps,
    enumerate_posets,
    is_monotone,
    iter_bits,
    map_to_json,
    pointwise_leq,
    poset_to_json,
    power,
)
from .reports import summarize

logger = get_logger(__name__)

IndexPair = Tuple[int, int]


@dataclass(frozen=True)
class Instance:
    poset: Poset
    s: EndoMap
    t: EndoMap
    params: Params

    @cached_property
    def maps(self) -> Tuple[EndoMap, ...]:
        """Map induced by each word of W(m, n), in ``wset`` order."""
        generators = {'s': self.s, 't': self.t}
        return tuple(evaluate(word, generators, self.poset.size) for word in wset(self.params))

    def to_json(self) -> Dict[str, Any]:
        return {
            'points': self.poset.size,
            'poset': poset_to_json(self.poset),
            's': map_to_json(self.s)['img'],
            't': map_to_json(self.t)['img'],
        }


def make_instance(p: Poset, s: Sequence[int], t: Sequence[int], params: Params) -> Instance:
    """
    Validate and build an instance.

    Raises:
        SizeMismatch: a map is not total on the poset
        NotMonotone / NotDominated / NotPeriodic: the defining conditions fail
    """
    s, t = check_map(s, p.size), check_map(t, p.size)
    for name, f in (('s', s), ('t', t)):
        if not is_monotone(f, p):
            raise NotMonotone(f'{name} is not order-preserving', map=name)
    if not pointwise_leq(s, t, p):
        raise NotDominated('s is not pointwise below t')
    if power(s, params.m) != s:
        raise NotPeriodic(f's^{params.m} != s', map='s')
    if power(t, params.n) != t:
        raise NotPeriodic(f't^{params.n} != t', map='t')
    return Instance(p, s, t, params)


@dataclass(frozen=True)
class Collapse:
    """Identified pairs ``(a, b)``, ``a < b``, of indices into ``wset(params)``, sorted."""

    params: Params
    pairs: Tuple[IndexPair, ...]

    @classmethod
    def of(cls, params: Params, pairs: Iterable[IndexPair]) -> 'Collapse':
        return cls(params, tuple(sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})))

    @cached_property
    def pair_set(self) -> FrozenSet[IndexPair]:
        return frozenset(self.pairs)

    def identifies(self, a: int, b: int) -> bool:
        return a == b or (min(a, b), max(a, b)) in self.pair_set

    def words(self) -> List[Tuple[str, str]]:
        words = wset(self.params)
        return [(words[a], words[b]) for a, b in self.pairs]

    def contains(self, other: 'Collapse') -> bool:
        return other.pair_set <= self.pair_set

    def is_congruence(self) -> bool:
        """Identification is an equivalence closed under multiplication on both sides."""
        table = multiplication_table(self.params)
        size = len(table)
        for a, b in self.pairs:
            for c in range(size):
                if not self.identifies(table[a][c], table[b][c]) or not self.identifies(table[c][a], table[c][b]):
                    return False
        for a, b in self.pairs:
            for c in range(size):
                if self.identifies(b, c) and not self.identifies(a, c):
                    return False
        return True

    def to_json(self) -> List[List[str]]:
        return [list(pair) for pair in self.words()]


def satisfied_collapse(inst: Instance) -> Collapse:
    maps = inst.maps
    pairs = [(a, b) for a in range(len(maps)) for b in range(a + 1, len(maps)) if maps[a] == maps[b]]
    return Collapse(inst.params, tuple(pairs))


def _order_mask(inst: Instance) -> int:
    maps, up = inst.maps, inst.poset.up
    size = len(maps)
    mask = 0
    for a, f in enumerate(maps):
        for b, g in enumerate(maps):
            if all(up[x] >> y & 1 for x, y in zip(f, g)):
                mask |= 1 << (a * size + b)
    return mask


def satisfied_order(inst: Instance) -> List[Tuple[str, str]]:
    """Every pair (a, b) of W(m, n) with ``a <= b`` pointwise on this instance."""
    words = wset(inst.params)
    size = len(words)
    return [(words[k // size], words[k % size]) for k in iter_bits(_order_mask(inst))]


def enumerate_instances(p: Poset, params: Params) -> Iterator[Instance]:
    """All instances on ``p``: ``t`` first, then ``s`` below it."""
    ts = list(enumerate_monotone_endomaps(p, predicate=lambda f: power(f, params.n) == f))
    for t in ts:
        below = [list(iter_bits(p.down[t[x]])) for x in range(p.size)]
        for s in enumerate_monotone_endomaps(p, predicate=lambda f: power(f, params.m) == f, candidates=below):
            yield Instance(p, s, t, params)


def _collapses_on(task: Tuple[Poset, Params]) -> Tuple[Dict[Tuple[IndexPair, ...], Tuple[EndoMap, EndoMap]], int]:
    p, params = task
    found: Dict[Tuple[IndexPair, ...], Tuple[EndoMap, EndoMap]] = {}
    count = 0
    for inst in enumerate_instances(p, params):
        count += 1
        key = satisfied_collapse(inst).pairs
        candidate = (inst.s, inst.t)
        if key not in found or candidate < found[key]:
            found[key] = candidate
    return found, count


def search_collapses(
    params: Params,
    max_points: int,
    mode: str = 'exhaustive',
    targets: Optional[Iterable[Collapse]] = None,
    floor: int = 5,
    jobs: int = 1,
    max_instances: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Collapses realised on posets with at most ``max_points`` points, with least witnesses.

    Witnesses compare by (size, canonical code, s, t). In ``witness`` mode the search
    finishes whole size levels and stops after the first level at or above ``floor``
    where every target is realised; targets default to the golden catalog when one exists.

    Raises:
        BudgetExceeded: more than ``max_instances`` instances were visited; ``partial`` holds the report so far
    """
    if mode not in ('exhaustive', 'witness'):
        raise ParamMismatch(f'unknown search mode {mode!r}', mode=mode)
    if mode == 'witness' and targets is None:
        targets = catalog_collapses(params)
    target_keys = None if targets is None else {c.pairs for c in targets}

    found: Dict[Tuple[IndexPair, ...], Dict[str, Any]] = {}
    levels: List[Dict[str, Any]] = []
    visited = 0

    def report(stopped_at: int) -> Dict[str, Any]:
        collapses = [
            {'pairs': Collapse(params, key).to_json(), 'witness': found[key]} for key in sorted(found)
        ]
        out: Dict[str, Any] = {
            'params': params.key(),
            'mode': mode,
            'max_points': max_points,
            'searched_points': stopped_at,
            'instances': visited,
            'levels': levels,
            'count': len(found),
            'collapses': collapses,
        }
        if target_keys is not None:
            out['targets'] = len(target_keys)
            out['missing_targets'] = len(target_keys - set(found))
            out['outside_targets'] = len(set(found) - target_keys)
        return out

    for n in range(1, max_points + 1):
        with log_context(search='collapses', params=params.key(), points=n):
            posets = list(enumerate_posets(n))
            results = run_tasks(_collapses_on, [(p, params) for p in posets], jobs)
            new = 0
            level_instances = 0
            for p, (per_poset, count) in zip(posets, results):
                level_instances += count
                for key in sorted(per_poset):
                    if key not in found:
                        s, t = per_poset[key]
                        found[key] = Instance(p, s, t, params).to_json()
                        new += 1
            visited += level_instances
            levels.append({'points': n, 'posets': len(posets), 'instances': level_instances, 'new': new})
            logger.info(f'{len(posets)} posets, {level_instances} instances, {len(found)} collapses (+{new})')
        if max_instances is not None and visited > max_instances:
            raise BudgetExceeded(f'visited {visited} instances', partial=report(n), max_instances=max_instances)
        if mode == 'witness' and n >= floor and target_keys is not None and target_keys <= set(found):
            return report(n)
    result = report(max_points)
    logger.debug(f'search summary: {summarize(levels)}')
    return result


def collapses_from_report(report: Dict[str, Any]) -> List[Collapse]:
    params = Params(*(int(v) for v in report['params'].split(',')))
    index = windex(params)
    return [Collapse.of(params, [(index[u], index[v]) for u, v in entry['pairs']]) for entry in report['collapses']]


# Order convergence


def _order_on(task: Tuple[Poset, Params]) -> int:
    p, params = task
    size = len(wset(params))
    mask = (1 << size * size) - 1
    for inst in enumerate_instances(p, params):
        mask &= _order_mask(inst)
    return mask


def order_intersection(params: Params, max_points: int, jobs: int = 1) -> Set[Tuple[str, str]]:
    """Pairs (a, b) with ``a <= b`` pointwise on every instance up to ``max_points``."""
    words = wset(params)
    size = len(words)
    mask = (1 << size * size) - 1
    for n in range(1, max_points + 1):
        posets = list(enumerate_posets(n))
        for part in run_tasks(_order_on, [(p, params) for p in posets], jobs):
            mask &= part
    return {(words[k // size], words[k % size]) for k in iter_bits(mask)}


def order_convergence(params: Params, max_points: int, jobs: int = 1) -> Dict[str, Any]:
    """Compare the sampled order with the general order of C(m, n)."""
    words = wset(params)
    general = order_poset(params)
    expected = {(words[a], words[b]) for a in range(len(words)) for b in range(len(words)) if general.leq(a, b)}
    sampled = order_intersection(params, max_points, jobs)
    return {
        'params': params.key(),
        'max_points': max_points,
        'unsound': sorted(expected - sampled),
        'not_separated': sorted(sampled - expected),
        'converged': sampled == expected,
    }


# Lifting into C(3, 3)


def lift_collapse(collapse: Collapse, target: Params) -> Collapse:
    """The collapse of ``target`` words satisfied by any instance with the given collapse."""
    source = collapse.params
    if not embeds(source, target):
        raise ParamMismatch(f'{source} instances are not {target} instances', source=source.key(), target=target.key())
    src_index = windex(source)
    forms = [src_index[normal_form(w, source)] for w in wset(target)]
    size = len(forms)
    pairs = [(a, b) for a in range(size) for b in range(a + 1, size) if collapse.identifies(forms[a], forms[b])]
    return Collapse(target, tuple(pairs))


def restrict_collapse(collapse: Collapse, source: Params) -> Collapse:
    """Inverse of :func:`lift_collapse` on collapses that contain the lifted relations."""
    target_index = windex(collapse.params)
    words = wset(source)
    for w in words:
        if w not in target_index:
            raise ParamMismatch(f'{w!r} is not a {collapse.params} normal form', word=w)
    pairs = [
        (a, b)
        for a in range(len(words))
        for b in range(a + 1, len(words))
        if collapse.identifies(target_index[words[a]], target_index[words[b]])
    ]
    return Collapse(source, tuple(pairs))


# The class catalog of C(3, 3)


@dataclass(frozen=True)
class TableCell:
    row: str
    col: str
    kind: str
    cls: Optional[str] = None


@dataclass(frozen=True)
class ClassCatalog33:
    classes: Tuple[Tuple[str, FrozenSet[IndexPair]], ...]
    parity: Tuple[Tuple[str, str], ...]
    arrows: Tuple[Tuple[str, str], ...]
    cells: Tuple[TableCell, ...]

    @cached_property
    def class_map(self) -> Dict[str, FrozenSet[IndexPair]]:
        return dict(self.classes)

    @property
    def labels(self) -> List[str]:
        return [label for label, _ in self.classes]

    def closure(self, labels: Iterable[str]) -> FrozenSet[str]:
        """Close a set of classes under arrows, gray cells and the conjunction cells."""
        closed = set(labels)
        changed = True
        while changed:
            changed = False
            for src, dst in self.arrows:
                if src in closed and dst not in closed:
                    closed.add(dst)
                    changed = True
            for cell in self.cells:
                if cell.kind == 'gray':
                    if cell.col in closed and cell.row not in closed:
                        closed.add(cell.row)
                        changed = True
                elif cell.cls is not None and cell.row in closed and cell.col in closed and cell.cls not in closed:
                    closed.add(cell.cls)
                    changed = True
        return frozenset(closed)

    def collapse_of(self, labels: Iterable[str]) -> Collapse:
        pairs: Set[IndexPair] = set()
        for label in self.closure(labels):
            pairs |= self.class_map[label]
        return Collapse.of(PARAMS_33, pairs)

    def with_arrow_reversed(self, src: str, dst: str) -> 'ClassCatalog33':
        arrows = tuple((b, a) if (a, b) == (src, dst) else (a, b) for a, b in self.arrows)
        return ClassCatalog33(self.classes, self.parity, arrows, self.cells)


PARAMS_33 = Params(3, 3)


@lru_cache(maxsize=None)
def load_class_catalog() -> ClassCatalog33:
    """
    The 27 equation classes over W(3, 3), their implications and the conjunction table.

    Raises:
        VerificationError: an equation is not between distinct normal forms, a parity tag is
            wrong, or the classes do not partition all pairs of W(3, 3)
    """
    data, table = load_fig6(), load_table1()
    index = windex(PARAMS_33)
    classes = []
    parity = []
    covered: Dict[IndexPair, str] = {}
    for entry in data['classes']:
        label = entry['label']
        pairs = set()
        for u, v in entry['equations']:
            if u not in index or v not in index or u == v:
                raise VerificationError(f'class {label}: {u}={v} is not between distinct normal forms', label=label)
            if word_length_parity(u, v) != entry['parity']:
                raise VerificationError(f'class {label}: parity tag disagrees with {u}={v}', label=label)
            pair = (min(index[u], index[v]), max(index[u], index[v]))
            if pair in covered:
                raise VerificationError(f'{u}={v} appears in classes {covered[pair]} and {label}', label=label)
            covered[pair] = label
            pairs.add(pair)
        classes.append((label, frozenset(pairs)))
        parity.append((label, entry['parity']))
    size = len(index)
    if len(covered) != size * (size - 1) // 2:
        raise VerificationError('classes do not cover every pair of W(3,3)', covered=len(covered))
    labels = {label for label, _ in classes}
    arrows = tuple((a, b) for a, b in data['arrows'])
    cells = tuple(TableCell(c['row'], c['col'], c['kind'], c.get('class')) for c in table['cells'])
    for a, b in arrows:
        if a not in labels or b not in labels:
            raise VerificationError(f'arrow {a}->{b} names an unknown class', arrow=[a, b])
    for cell in cells:
        for name in (cell.row, cell.col, cell.cls):
            if name is not None and name not in labels:
                raise VerificationError(f'table cell names an unknown class {name}', cell=[cell.row, cell.col])
    return ClassCatalog33(tuple(classes), tuple(parity), arrows, cells)


def class_status(inst: Instance, catalog: ClassCatalog33) -> Tuple[Dict[str, bool], List[str]]:
    """Per class: whether all its equations hold; plus the classes that hold only partly."""
    collapse = satisfied_collapse(inst)
    status: Dict[str, bool] = {}
    split: List[str] = []
    for label, pairs in catalog.classes:
        held = [collapse.identifies(a, b) for a, b in sorted(pairs)]
        status[label] = all(held)
        if any(held) and not all(held):
            split.append(label)
    return status, split


def check_class_coherence(inst: Instance, catalog: ClassCatalog33) -> List[Dict[str, Any]]:
    """
    Every way the instance contradicts the class catalog; empty when coherent.

    A gray cell (row e1, column e2) asserts e2 => e1. A plain cell e3 asserts
    (e1 and e2) <=> e3, an italic one (e1 and e2) <=> (e1 and e3), a bold one
    (e1 and e2) <=> (e3 and e2). Blank cells assert nothing.
    """
    if inst.params != PARAMS_33:
        raise ParamMismatch('the class catalog describes C(3,3)', params=inst.params.key())
    status, split = class_status(inst, catalog)
    problems: List[Dict[str, Any]] = [{'kind': 'class-split', 'class': label} for label in split]
    for src, dst in catalog.arrows:
        if status[src] and not status[dst]:
            problems.append({'kind': 'arrow', 'from': src, 'to': dst})
    for cell in catalog.cells:
        e1, e2 = status[cell.row], status[cell.col]
        if cell.kind == 'gray':
            ok = e1 or not e2
        elif cell.kind == 'blank' or cell.cls is None:
            continue
        else:
            e3 = status[cell.cls]
            both = e1 and e2
            if cell.kind == 'plain':
                ok = both == e3
            elif cell.kind == 'italic':
                ok = both == (e1 and e3)
            else:
                ok = both == (e3 and e2)
        if not ok:
            problems.append({'kind': 'table-cell', 'row': cell.row, 'col': cell.col, 'cell': cell.kind})
    return problems


def _coherence_on(task: Tuple[Poset, ClassCatalog33]) -> Tuple[int, List[Dict[str, Any]]]:
    p, catalog = task
    count = 0
    failures = []
    for inst in enumerate_instances(p, PARAMS_33):
        count += 1
        problems = check_class_coherence(inst, catalog)
        if problems:
            failures.append({'instance': inst.to_json(), 'problems': problems})
    return count, failures


def coherence_sweep(max_points: int, catalog: Optional[ClassCatalog33] = None, jobs: int = 1) -> Dict[str, Any]:
    """Check every C(3, 3) instance up to ``max_points`` against the class catalog."""
    catalog = catalog or load_class_catalog()
    instances = 0
    failures: List[Dict[str, Any]] = []
    for n in range(1, max_points + 1):
        with log_context(search='coherence', points=n):
            posets = list(enumerate_posets(n))
            for count, found in run_tasks(_coherence_on, [(p, catalog) for p in posets], jobs):
                instances += count
                failures.extend(found)
            logger.info(f'{instances} instances checked, {len(failures)} incoherent')
    return {'max_points': max_points, 'instances': instances, 'failures': failures, 'coherent': not failures}


# Golden collapse catalogs


@dataclass(frozen=True)
class CatalogNode:
    node: int
    generators: Tuple[str, ...]
    classes: FrozenSet[str]
    collapse: Collapse
    c22: bool


@lru_cache(maxsize=None)
def catalog_nodes() -> Tuple[CatalogNode, ...]:
    """The 52 global collapses of C(3, 3), each closed from its generating classes."""
    catalog = load_class_catalog()
    out = []
    for entry in fig7_nodes():
        closed = catalog.closure(entry['classes'])
        out.append(
            CatalogNode(entry['id'], tuple(entry['classes']), closed, catalog.collapse_of(closed), entry['c22'])
        )
    return tuple(out)


def catalog_collapses(params: Params) -> Optional[List[Collapse]]:
    """
    Golden global collapses for C(2,2), C(2,3) and C(3,3); None for other parameters.

    The smaller semigroups' collapses are the C(3, 3) collapses that contain the
    identifications ``s = ss`` (and ``t = tt`` for C(2,2)), restricted to their words.
    """
    nodes = catalog_nodes()
    if params == PARAMS_33:
        return [node.collapse for node in nodes]
    needed = {(2, 2): {'2', '2d'}, (2, 3): {'2'}}.get((params.m, params.n))
    if needed is None:
        return None
    restricted = [restrict_collapse(node.collapse, params) for node in nodes if needed <= node.classes]
    return list(dict.fromkeys(restricted))


def c22_compatible(collapse: Collapse) -> bool:
    """Whether a C(3, 3) collapse identifies ``s`` with ``ss`` and ``t`` with ``tt``."""
    index = windex(collapse.params)
    return collapse.identifies(index['s'], index['ss']) and collapse.identifies(index['t'], index['tt'])


def containment_order(collapses: Sequence[Collapse], names: Optional[Sequence[str]] = None) -> DiagramCatalog:
    """Hasse diagram of the collapses ordered by inclusion of their pair sets."""
    names = list(names) if names is not None else [f'#{k}' for k in range(len(collapses))]
    if len({c.params for c in collapses}) > 1:
        raise ParamMismatch('collapses from different parameters')
    sets = [c.pair_set for c in collapses]
    edges = []
    for a, lower in enumerate(sets):
        for b, upper in enumerate(sets):
            if a != b and lower < upper:
                between = any(lower < mid < upper for mid in sets)
                if not between:
                    edges.append((names[a], names[b], 'solid'))
    return DiagramCatalog('containment', tuple(names), tuple(edges))
