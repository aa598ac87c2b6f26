"""
The eighteen Kuratowski monoids of a closure ``c`` and an interior ``i`` on a poset.

Any word in ``c`` and ``i`` reduces to one of seven: ``id, i, c, ic, ci, ici, cic``.
A (poset, c, i) instance is classified by which of the seven coincide pointwise.
The catalog of admissible partitions is built from the defining equations of each
label, closed as an ordered congruence over the seven-element order
``i <= ici <= ic, ci <= cic <= c`` and ``i <= id <= c``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Sequence, Tuple

from .catalogs import load_kuratowski_boxes
from .config import get_logger
from .context import log_context
from .errors import NotAClosure, NotAnInterior, Unclassified, UnknownLetter, VerificationError
from .monoid import evaluate, parse_word, word_name
from .parallel import run_tasks
from .posets import (
    EndoMap,
    Poset,
    dual,
    enumerate_monotone_endomaps,
    enumerate_posets,
    is_closure,
    is_interior,
    iter_bits,
    map_to_json,
    poset_to_json,
)

logger = get_logger(__name__)

K_WORDS: Tuple[str, ...] = ('', 'i', 'c', 'ic', 'ci', 'ici', 'cic')

Partition = FrozenSet[FrozenSet[str]]


def k_words() -> List[str]:
    """The seven reduced words, ``id`` first."""
    return [word_name(w) for w in K_WORDS]


def reduce_k_word(word: str) -> str:
    """Reduce any word over ``c, i`` to one of the seven."""
    word = parse_word(word)
    collapsed: List[str] = []
    for letter in word:
        if letter not in 'ci':
            raise UnknownLetter(f'not a Kuratowski word: {word!r}', word=word, letter=letter)
        if not collapsed or collapsed[-1] != letter:
            collapsed.append(letter)
    if len(collapsed) >= 4:
        collapsed = collapsed[: 2 if len(collapsed) % 2 == 0 else 3]
    return ''.join(collapsed)


@dataclass(frozen=True)
class KuratowskiLabel:
    name: str
    dual: str
    partition: Tuple[Tuple[str, ...], ...]

    @property
    def cardinality(self) -> int:
        return len(self.partition)

    def key(self) -> Partition:
        return frozenset(frozenset(block) for block in self.partition)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.name,
            'dual': self.dual,
            'blocks': self.cardinality,
            'partition': [[word_name(w) for w in block] for block in self.partition],
        }


def _ordered_congruence(equations: Sequence[Tuple[str, str]], base: Sequence[Tuple[str, str]]) -> Partition:
    index = {w: k for k, w in enumerate(K_WORDS)}
    n = len(K_WORDS)
    rel = [[a == b for b in range(n)] for a in range(n)]
    for lo, hi in base:
        rel[index[lo]][index[hi]] = True
    for u, v in equations:
        rel[index[u]][index[v]] = rel[index[v]][index[u]] = True

    changed = True
    while changed:
        changed = False
        for k in range(n):
            for a in range(n):
                if rel[a][k]:
                    for b in range(n):
                        if rel[k][b] and not rel[a][b]:
                            rel[a][b] = changed = True
        for a in range(n):
            for b in range(n):
                if not rel[a][b]:
                    continue
                u, v = K_WORDS[a], K_WORDS[b]
                for x in 'ci':
                    for left, right in ((x + u, x + v), (u + x, v + x)):
                        la, rb = index[reduce_k_word(left)], index[reduce_k_word(right)]
                        if not rel[la][rb]:
                            rel[la][rb] = changed = True

    blocks: Dict[FrozenSet[int], None] = {}
    for a in range(n):
        blocks[frozenset(b for b in range(n) if rel[a][b] and rel[b][a])] = None
    return frozenset(frozenset(K_WORDS[b] for b in block) for block in blocks)


def _ordered_blocks(partition: Partition) -> Tuple[Tuple[str, ...], ...]:
    position = {w: k for k, w in enumerate(K_WORDS)}
    blocks = [tuple(sorted(block, key=position.__getitem__)) for block in partition]
    return tuple(sorted(blocks, key=lambda block: position[block[0]]))


@lru_cache(maxsize=None)
def kuratowski_catalog() -> Tuple[KuratowskiLabel, ...]:
    """
    The eighteen labels with their partitions.

    Raises:
        VerificationError: two labels share a partition, or a block count disagrees with the data
    """
    data = load_kuratowski_boxes()
    base = [(parse_word(lo), parse_word(hi)) for lo, hi in data['base_order']]
    labels = []
    seen: Dict[Partition, str] = {}
    for entry in data['labels']:
        equations = [(parse_word(u), parse_word(v)) for u, v in entry['equations']]
        partition = _ordered_congruence(equations, base)
        if partition in seen:
            raise VerificationError(
                f'labels {seen[partition]} and {entry["label"]} share a partition', label=entry['label']
            )
        if len(partition) != entry['blocks']:
            raise VerificationError(
                f'label {entry["label"]} closes to {len(partition)} blocks, expected {entry["blocks"]}',
                label=entry['label'],
            )
        seen[partition] = entry['label']
        labels.append(KuratowskiLabel(entry['label'], entry['dual'], _ordered_blocks(partition)))
    return tuple(labels)


@lru_cache(maxsize=None)
def _by_partition() -> Dict[Partition, KuratowskiLabel]:
    return {label.key(): label for label in kuratowski_catalog()}


def label(name: str) -> KuratowskiLabel:
    for entry in kuratowski_catalog():
        if entry.name == name:
            return entry
    raise KeyError(name)


def dual_label(name: str) -> str:
    return label(name).dual


def k_partition(p: Poset, c: EndoMap, i: EndoMap) -> Partition:
    generators = {'c': c, 'i': i}
    blocks: Dict[EndoMap, List[str]] = {}
    for word in K_WORDS:
        blocks.setdefault(evaluate(word, generators, p.size), []).append(word)
    return frozenset(frozenset(block) for block in blocks.values())


def classify(p: Poset, c: EndoMap, i: EndoMap) -> KuratowskiLabel:
    """
    Label of the Kuratowski monoid generated by closure ``c`` and interior ``i``.

    Raises:
        NotAClosure / NotAnInterior: the maps do not qualify
        Unclassified: the partition is not in the catalog
    """
    if not is_closure(c, p):
        raise NotAClosure('c is not a closure operator', c=list(c))
    if not is_interior(i, p):
        raise NotAnInterior('i is not an interior operator', i=list(i))
    partition = k_partition(p, c, i)
    found = _by_partition().get(partition)
    if found is None:
        raise Unclassified(
            'partition of the seven words is not in the catalog',
            partition=[[word_name(w) for w in block] for block in _ordered_blocks(partition)],
            poset=poset_to_json(p),
            c=list(c),
            i=list(i),
        )
    return found


def closures(p: Poset) -> List[EndoMap]:
    return list(
        enumerate_monotone_endomaps(
            p,
            predicate=lambda f: all(f[f[x]] == f[x] for x in range(p.size)),
            candidates=[list(iter_bits(p.up[x])) for x in range(p.size)],
        )
    )


def interiors(p: Poset) -> List[EndoMap]:
    return closures(dual(p))


def _realize_on(p: Poset) -> Dict[str, Tuple[EndoMap, EndoMap]]:
    found: Dict[str, Tuple[EndoMap, EndoMap]] = {}
    for c in closures(p):
        for i in interiors(p):
            name = classify(p, c, i).name
            if name not in found or (c, i) < found[name]:
                found[name] = (c, i)
    return found


def realize_labels(max_points: int, jobs: int = 1, stop_when_complete: bool = True) -> Dict[str, Any]:
    """
    Least witness for every label over posets with at most ``max_points`` points.

    Witnesses compare by (size, canonical code, c, i). With ``stop_when_complete`` the search
    ends after the first size level at which all labels are realised.

    Returns:
        Report with ``labels`` (label -> witness), ``missing`` and ``minimal_sizes``
    """
    wanted = [entry.name for entry in kuratowski_catalog()]
    witnesses: Dict[str, Dict[str, Any]] = {}
    for n in range(1, max_points + 1):
        with log_context(search='kuratowski', points=n):
            posets = list(enumerate_posets(n))
            for p, found in zip(posets, run_tasks(_realize_on, posets, jobs)):
                for name in sorted(found):
                    if name not in witnesses:
                        c, i = found[name]
                        witnesses[name] = {
                            'points': n,
                            'poset': poset_to_json(p),
                            'c': map_to_json(c)['img'],
                            'i': map_to_json(i)['img'],
                        }
            logger.info(f'{len(witnesses)}/{len(wanted)} labels realised after {len(posets)} posets')
        if stop_when_complete and len(witnesses) == len(wanted):
            break
    missing = [name for name in wanted if name not in witnesses]
    if missing:
        logger.warning(f'labels not realised within {max_points} points: {missing}')
    return {
        'max_points': max_points,
        'labels': {name: witnesses[name] for name in wanted if name in witnesses},
        'minimal_sizes': {name: witnesses[name]['points'] for name in wanted if name in witnesses},
        'missing': missing,
    }


def classify_exhaustive(max_points: int) -> Dict[str, int]:
    """Count instances per label over every poset up to ``max_points``; Unclassified propagates."""
    counts: Dict[str, int] = {}
    for n in range(1, max_points + 1):
        for p in enumerate_posets(n):
            cs, ins = closures(p), interiors(p)
            for c in cs:
                for i in ins:
                    name = classify(p, c, i).name
                    counts[name] = counts.get(name, 0) + 1
    return counts


def dual_instance_label(p: Poset, c: EndoMap, i: EndoMap) -> str:
    """Label of the order-dual instance, where the roles of closure and interior swap."""
    return classify(dual(p), i, c).name
