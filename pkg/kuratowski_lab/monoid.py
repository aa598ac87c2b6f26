"""
Operator monoids generated by named self-maps of a finite poset.

Words are strings over single-letter generator names. A word acts right to left:
``'ci'`` is ``x -> c(i(x))``. The empty word (written ``id`` in catalogs) is the identity.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from .config import get_logger
from .errors import EmptyWord, InputError, NotAPartialOrder, SizeMismatch, UnknownLetter
from .posets import EndoMap, Poset, check_map, compose, identity, validate_poset
from .reports import dot_graph

logger = get_logger(__name__)

IDENTITY_NAME = 'id'


def parse_word(name: str) -> str:
    """Catalog spelling to letters: ``'id'`` is the empty word."""
    return '' if name == IDENTITY_NAME else name


def word_name(word: str) -> str:
    return word or IDENTITY_NAME


def evaluate(word: str, generators: Mapping[str, EndoMap], size: int) -> EndoMap:
    """The map a word induces, rightmost letter applied first."""
    f = identity(size)
    for letter in word:
        try:
            g = generators[letter]
        except KeyError:
            raise UnknownLetter(f'letter {letter!r} is not a generator', letter=letter, word=word) from None
        f = compose(f, g)
    return f


@dataclass(frozen=True)
class OperatorMonoid:
    """
    Composition closure of named generators, with shortest witnesses and pointwise order.

    ``elements[k]`` is produced by ``witnesses[k]``; ``table[a][b]`` is the index of
    ``elements[a]`` after ``elements[b]``; ``order[a][b]`` is pointwise ``elements[a] <= elements[b]``.
    """

    poset: Poset
    alphabet: Tuple[str, ...]
    generators: Tuple[EndoMap, ...]
    elements: Tuple[EndoMap, ...]
    witnesses: Tuple[str, ...]
    has_identity: bool

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> Dict[EndoMap, int]:
        return {f: k for k, f in enumerate(self.elements)}

    @cached_property
    def table(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self.index[compose(f, g)] for g in self.elements) for f in self.elements)

    @cached_property
    def order(self) -> Tuple[Tuple[bool, ...], ...]:
        up = self.poset.up
        return tuple(
            tuple(all(up[a] >> b & 1 for a, b in zip(f, g)) for g in self.elements) for f in self.elements
        )

    @cached_property
    def generator_map(self) -> Dict[str, EndoMap]:
        return dict(zip(self.alphabet, self.generators))

    def map_of(self, word: str) -> EndoMap:
        word = parse_word(word)
        if not word and not self.has_identity:
            raise EmptyWord('the empty word is not an element of this semigroup')
        return evaluate(word, self.generator_map, self.poset.size)

    def element_of(self, word: str) -> int:
        return self.index[self.map_of(word)]

    def edges(self) -> List[Tuple[int, int]]:
        return hasse_edges(self.order)


def generate_monoid(
    p: Poset,
    generators: Mapping[str, Sequence[int]],
    include_identity: bool = True,
) -> OperatorMonoid:
    """
    Breadth-first closure of ``generators`` under composition.

    The mapping's key order is the alphabet order. Witnesses are length-lex least: a level
    is expanded parent by parent in discovery order, appending letters in alphabet order.

    Args:
        p: Carrier poset
        generators: Single-letter names to self-maps
        include_identity: Put the identity first with the empty witness

    Returns:
        The OperatorMonoid
    """
    alphabet = tuple(generators)
    for name in alphabet:
        if len(name) != 1 or name == ' ':
            raise InputError(f'generator names must be single letters, got {name!r}', name=name)
    gens = tuple(check_map(generators[name], p.size) for name in alphabet)

    elements: List[EndoMap] = []
    witnesses: List[str] = []
    seen: Dict[EndoMap, int] = {}

    def admit(f: EndoMap, word: str) -> bool:
        if f in seen:
            return False
        seen[f] = len(elements)
        elements.append(f)
        witnesses.append(word)
        return True

    if include_identity:
        admit(identity(p.size), '')

    frontier = []
    for a, g in zip(alphabet, gens):
        if admit(g, a):
            frontier.append(len(elements) - 1)
    while frontier:
        next_frontier = []
        for parent in frontier:
            f, word = elements[parent], witnesses[parent]
            for a, g in zip(alphabet, gens):
                if admit(compose(f, g), word + a):
                    next_frontier.append(len(elements) - 1)
        frontier = next_frontier

    logger.debug(f'monoid on {p.size} points: {len(elements)} elements from {"".join(alphabet)}')
    return OperatorMonoid(p, alphabet, gens, tuple(elements), tuple(witnesses), include_identity)


def element_partition(m: OperatorMonoid, words: Sequence[str]) -> List[Tuple[str, ...]]:
    """
    Group words by the map they induce on ``m``'s poset.

    Blocks keep the input order of their words and are ordered by their first word.
    """
    blocks: Dict[EndoMap, List[str]] = {}
    for word in words:
        blocks.setdefault(m.map_of(word), []).append(word)
    return [tuple(block) for block in blocks.values()]


def hasse_edges(order: Any) -> List[Tuple[int, int]]:
    """Covering pairs of a partial order given as a boolean matrix."""
    try:
        p = validate_poset(np.asarray(order, dtype=bool))
    except SizeMismatch:
        raise
    except InputError as e:
        raise NotAPartialOrder(f'not a partial order: {e.message}', **e.details) from e
    return list(p.covers)


def to_json(m: OperatorMonoid) -> Dict[str, Any]:
    return {
        'alphabet': list(m.alphabet),
        'elements': [{'witness': word_name(w), 'img': list(f)} for w, f in zip(m.witnesses, m.elements)],
        'edges': [list(e) for e in m.edges()],
    }


def to_dot(m: OperatorMonoid, name: str = 'monoid') -> str:
    labels = [word_name(w) for w in m.witnesses]
    return dot_graph(labels, [(labels[a], labels[b]) for a, b in m.edges()], name=name)
