"""
The monoid generated by an interior ``i`` and a pseudocomplement ``-`` on a poset.

A pseudocomplement here is any self-map with ``a <= -x`` iff ``x <= -a``. Catalog words
use ``b`` for ``-i-``; :func:`expand_b` rewrites them into the two generators before
evaluation.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .catalogs import load_catalog
from .config import get_logger
from .context import log_context
from .errors import BudgetExceeded, InvalidInstance, NotAnInterior, PreconditionFailed, VerificationError
from .kuratowski import interiors
from .monoid import OperatorMonoid, evaluate, generate_monoid, parse_word
from .parallel import run_tasks
from .posets import (
    EndoMap,
    Poset,
    check_map,
    enumerate_posets,
    is_closure,
    is_interior,
    iter_bits,
    map_to_json,
    pointwise_leq,
    poset_to_json,
)

logger = get_logger(__name__)

ALPHABET = ('i', '-')

# Consequences of i = --i that fold the 31 catalog words onto the localic catalog.
LOCALIC_IDENTITIES: Tuple[Tuple[str, str], ...] = (
    ('i', 'i--i'),
    ('i-', '-b'),
    ('i--', '-b-'),
    ('ib', '--ib'),
    ('ibi', '--ibi'),
    ('ibi--', '--ibi--'),
    ('i-i', '-bi'),
    ('ibi-', '-bib'),
    ('ib-', '-bi--'),
)

LOCALIC_BOUND = 21
M_BOUND = 31


def is_pseudocomplement_op(p: Poset, f: Sequence[int]) -> bool:
    """``a <= f(x)`` iff ``x <= f(a)`` for every pair; such an ``f`` is antitone."""
    f = check_map(f, p.size)
    for a in range(p.size):
        for x in range(a, p.size):
            if p.leq(a, f[x]) != p.leq(x, f[a]):
                return False
    for x in range(p.size):
        for y in iter_bits(p.up[x]):
            if not p.leq(f[y], f[x]):
                raise VerificationError('Galois map is not antitone', map=list(f), x=x, y=y)
    return True


def enumerate_pseudocomplements(p: Poset) -> Iterator[EndoMap]:
    """Every pseudocomplement of ``p`` in lexicographic order of images."""
    n = p.size
    f = [0] * n

    def extend(k: int) -> Iterator[EndoMap]:
        if k == n:
            yield tuple(f)
            return
        for value in range(n):
            f[k] = value
            if all(p.leq(a, value) == p.leq(k, f[a]) for a in range(k + 1)):
                yield from extend(k + 1)

    yield from extend(0)


@dataclass(frozen=True)
class PseudoInstance:
    poset: Poset
    i: EndoMap
    neg: EndoMap

    @cached_property
    def generators(self) -> Dict[str, EndoMap]:
        return dict(zip(ALPHABET, (self.i, self.neg)))

    def map_of(self, word: str) -> EndoMap:
        """Map induced by a catalog word; ``b`` is expanded and ``id`` is the identity."""
        return evaluate(expand_b(word), self.generators, self.poset.size)

    def leq(self, lo: str, hi: str) -> bool:
        return pointwise_leq(self.map_of(lo), self.map_of(hi), self.poset)

    def to_json(self) -> Dict[str, Any]:
        return {
            'points': self.poset.size,
            'poset': poset_to_json(self.poset),
            'i': map_to_json(self.i)['img'],
            'neg': map_to_json(self.neg)['img'],
        }


def make_pseudo_instance(p: Poset, i: Sequence[int], neg: Sequence[int]) -> PseudoInstance:
    """
    Raises:
        SizeMismatch: a map is not total
        NotAnInterior: ``i`` is not an interior operator
        InvalidInstance: ``neg`` violates the Galois law
    """
    i, neg = check_map(i, p.size), check_map(neg, p.size)
    if not is_interior(i, p):
        raise NotAnInterior('i is not an interior operator', i=list(i))
    if not is_pseudocomplement_op(p, neg):
        raise InvalidInstance('neg is not a pseudocomplement', neg=list(neg))
    return PseudoInstance(p, i, neg)


def _instances_on(p: Poset) -> Iterator[PseudoInstance]:
    negs = list(enumerate_pseudocomplements(p))
    for i in interiors(p):
        for neg in negs:
            yield PseudoInstance(p, i, neg)


def enumerate_pseudo_instances(
    max_points: int, predicate: Optional[Callable[[PseudoInstance], bool]] = None
) -> Iterator[PseudoInstance]:
    """Instances ordered by size, poset code, ``i`` and ``neg``."""
    for n in range(1, max_points + 1):
        for p in enumerate_posets(n):
            for inst in _instances_on(p):
                if predicate is None or predicate(inst):
                    yield inst


def expand_b(word: str) -> str:
    return parse_word(word).replace('b', '-i-')


@lru_cache(maxsize=None)
def m_words() -> Tuple[str, ...]:
    """The 31 catalog words, upper component first; ``b`` is kept unexpanded."""
    return load_catalog('fig2').nodes


@lru_cache(maxsize=None)
def dashed_pairs() -> Tuple[Tuple[str, str], ...]:
    return tuple((lo, hi) for lo, hi, style in load_catalog('fig2').edges if style == 'dashed')


def generate_m(inst: PseudoInstance) -> OperatorMonoid:
    """
    The monoid generated by ``i`` and ``-``.

    Raises:
        VerificationError: an element is not induced by any catalog word
    """
    m = generate_monoid(inst.poset, inst.generators)
    covered = {inst.map_of(word) for word in m_words()}
    if len(m) > M_BOUND or any(f not in covered for f in m.elements):
        raise VerificationError(
            'monoid has elements outside the catalog', size=len(m), instance=inst.to_json()
        )
    return m


def m_partition(inst: PseudoInstance) -> List[Tuple[str, ...]]:
    """Catalog words grouped by the element they induce, in catalog order."""
    generate_m(inst)
    words = m_words()
    return [tuple(words[k] for k in block) for block in _word_blocks(inst)]


def _word_blocks(inst: PseudoInstance) -> List[List[int]]:
    blocks: Dict[EndoMap, List[int]] = {}
    for k, word in enumerate(m_words()):
        blocks.setdefault(inst.map_of(word), []).append(k)
    return list(blocks.values())


def verify_edges(inst: PseudoInstance) -> Dict[str, Any]:
    """Check every solid catalog edge and the derived laws on one instance."""
    violations: List[Dict[str, Any]] = []
    for lo, hi in load_catalog('fig2').solid:
        if not inst.leq(lo, hi):
            violations.append({'law': f'{lo} <= {hi}'})
    if inst.map_of('---') != inst.neg:
        violations.append({'law': '--- = -'})
    for word in ('--', 'b'):
        if not is_closure(inst.map_of(word), inst.poset):
            violations.append({'law': f'{word} is a closure'})
    return {'violations': violations, 'verified': not violations}


def _verify_on(p: Poset) -> Tuple[int, int, List[Dict[str, Any]]]:
    count, largest, failures = 0, 0, []
    for inst in _instances_on(p):
        count += 1
        largest = max(largest, len(generate_m(inst)))
        report = verify_edges(inst)
        if not report['verified']:
            failures.append({'instance': inst.to_json(), 'violations': report['violations']})
    return count, largest, failures


def verify_all(max_points: int, jobs: int = 1) -> Dict[str, Any]:
    """Run :func:`verify_edges` and :func:`generate_m` on every instance up to ``max_points``."""
    instances, largest = 0, 0
    failures: List[Dict[str, Any]] = []
    for n in range(1, max_points + 1):
        with log_context(search='pseudo-verify', points=n):
            posets = list(enumerate_posets(n))
            for count, size, found in run_tasks(_verify_on, posets, jobs):
                instances += count
                largest = max(largest, size)
                failures.extend(found)
            logger.info(f'{instances} instances, largest monoid {largest}')
    return {
        'max_points': max_points,
        'instances': instances,
        'largest_monoid': largest,
        'failures': failures,
        'verified': not failures,
    }


def _refutation_point(inst: PseudoInstance, lo: str, hi: str) -> Optional[int]:
    f, g = inst.map_of(lo), inst.map_of(hi)
    for x in range(inst.poset.size):
        if not inst.poset.leq(f[x], g[x]):
            return x
    return None


def search_dashed_counterexamples(max_points: int = 4, max_instances: Optional[int] = None) -> Dict[str, Any]:
    """
    Least instance refuting each dashed inequality ``lo <= hi`` of the catalog.

    Raises:
        BudgetExceeded: ``max_instances`` were visited before every pair was refuted
    """
    pairs = dashed_pairs()
    witnesses: Dict[str, Dict[str, Any]] = {}
    visited = 0

    def report() -> Dict[str, Any]:
        missing = [f'{lo} <= {hi}' for lo, hi in pairs if f'{lo} <= {hi}' not in witnesses]
        return {
            'max_points': max_points,
            'instances': visited,
            'witnesses': witnesses,
            'minimal_sizes': {key: w['points'] for key, w in witnesses.items()},
            'missing': missing,
            'complete': not missing,
        }

    for inst in enumerate_pseudo_instances(max_points):
        visited += 1
        if max_instances is not None and visited > max_instances:
            raise BudgetExceeded(f'visited {max_instances} instances', partial=report(), max_instances=max_instances)
        for lo, hi in pairs:
            key = f'{lo} <= {hi}'
            if key in witnesses:
                continue
            x = _refutation_point(inst, lo, hi)
            if x is not None:
                witnesses[key] = dict(inst.to_json(), point=x)
                logger.info(f'refuted {key} on {inst.poset.size} points')
        if len(witnesses) == len(pairs):
            break
    return report()


def dashed_profile(inst: PseudoInstance) -> Tuple[bool, ...]:
    """Which dashed inequalities hold pointwise on the instance."""
    return tuple(inst.leq(lo, hi) for lo, hi in dashed_pairs())


def _profiles_on(p: Poset) -> Dict[Tuple[bool, ...], Dict[str, Any]]:
    found: Dict[Tuple[bool, ...], Dict[str, Any]] = {}
    for inst in _instances_on(p):
        found.setdefault(dashed_profile(inst), inst.to_json())
    return found


def implication_redundancy_check(max_points: int = 4, include_diagonal: bool = False, jobs: int = 1) -> Dict[str, Any]:
    """
    For each ordered pair X, Y of dashed inequalities, an instance where X holds and Y fails.

    With ``include_diagonal`` the X => X obligations are added; they can never be discharged.
    """
    pairs = dashed_pairs()
    profiles: Dict[Tuple[bool, ...], Dict[str, Any]] = {}
    for n in range(1, max_points + 1):
        for found in run_tasks(_profiles_on, list(enumerate_posets(n)), jobs):
            for profile, witness in found.items():
                profiles.setdefault(profile, witness)
    obligations = [
        (x, y) for x, y in itertools.product(range(len(pairs)), repeat=2) if include_diagonal or x != y
    ]
    discharged: Dict[str, Dict[str, Any]] = {}
    missing: List[str] = []
    for x, y in obligations:
        key = f'({pairs[x][0]} <= {pairs[x][1]}) => ({pairs[y][0]} <= {pairs[y][1]})'
        witness = next((w for profile, w in sorted(profiles.items()) if profile[x] and not profile[y]), None)
        if witness is None:
            missing.append(key)
        else:
            discharged[key] = witness
    return {
        'max_points': max_points,
        'obligations': len(obligations),
        'discharged': discharged,
        'missing': missing,
        'complete': not missing,
    }


def localic_quotient_check(inst: PseudoInstance) -> Dict[str, Any]:
    """
    On an instance with ``i = --i``: the folding identities, the block bound and coverage by
    the localic catalog.

    Raises:
        PreconditionFailed: ``i != --i``
    """
    if inst.map_of('--i') != inst.i:
        raise PreconditionFailed('instance does not satisfy i = --i', instance=inst.to_json())
    identities = [{'lhs': lhs, 'rhs': rhs, 'holds': inst.map_of(lhs) == inst.map_of(rhs)} for lhs, rhs in LOCALIC_IDENTITIES]
    upper = set(load_catalog('fig3_upper').nodes)
    words = m_words()
    blocks = [tuple(words[k] for k in block) for block in _word_blocks(inst)]
    uncovered = [list(block) for block in blocks if not upper.intersection(block)]
    return {
        'identities': identities,
        'blocks': len(blocks),
        'uncovered_blocks': uncovered,
        'verified': all(entry['holds'] for entry in identities) and len(blocks) <= LOCALIC_BOUND and not uncovered,
    }


def _order_on(p: Poset) -> List[List[bool]]:
    words = m_words()
    size = len(words)
    rel = [[True] * size for _ in range(size)]
    for inst in _instances_on(p):
        maps = [inst.map_of(w) for w in words]
        for a in range(size):
            for b in range(size):
                if rel[a][b] and not pointwise_leq(maps[a], maps[b], p):
                    rel[a][b] = False
    return rel


def sampled_order(max_points: int, jobs: int = 1) -> List[Tuple[str, str]]:
    """Pairs of catalog words ordered pointwise on every instance up to ``max_points``."""
    words = m_words()
    size = len(words)
    rel = [[True] * size for _ in range(size)]
    for n in range(1, max_points + 1):
        for part in run_tasks(_order_on, list(enumerate_posets(n)), jobs):
            for a in range(size):
                for b in range(size):
                    rel[a][b] = rel[a][b] and part[a][b]
    return [(words[a], words[b]) for a in range(size) for b in range(size) if a != b and rel[a][b]]
