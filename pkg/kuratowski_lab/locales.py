"""
Finite frames, their nuclei and the co-frame of sublocales.

A finite distributive lattice is a frame. Sublocales are represented by nuclei; the
sublocale of ``j`` is its fixpoint set, so a larger nucleus is a smaller sublocale. All
operators here act on the sublocale lattice ordered by inclusion.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, Iterator, List, Tuple

import numpy as np

from .catalogs import load_catalog
from .config import get_logger
from .errors import CoFrameViolation, InputError, NotALattice, NotDistributive, VerificationError
from .monoid import OperatorMonoid, evaluate, generate_monoid, parse_word
from .posets import (
    EndoMap,
    Poset,
    add_maximal,
    canonical,
    canonical_form,
    dual,
    enumerate_monotone_endomaps,
    is_monotone,
    iter_bits,
    order_ideals,
    pointwise_leq,
    validate_poset,
)

logger = get_logger(__name__)

ALPHABET = ('i', 'c', '-')
LOCALIC_BOUND = 21

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteFrame:
    poset: Poset
    meet: Table
    join: Table
    imp: Table
    top: int
    bottom: int

    @property
    def size(self) -> int:
        return self.poset.size

    def join_all(self, elements: Iterator[int]) -> int:
        out = self.bottom
        for a in elements:
            out = self.join[out][a]
        return out

    def pseudocomplement(self) -> EndoMap:
        return tuple(self.imp[a][self.bottom] for a in range(self.size))


def check_frame(p: Poset) -> FiniteFrame:
    """
    Tabulate meets, joins and Heyting implication.

    Raises:
        NotALattice: some pair lacks a meet or a join
        NotDistributive: meets do not distribute over joins
    """
    n = p.size
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            m, j = p.meet(a, b), p.join(a, b)
            if m is None or j is None:
                raise NotALattice('missing meet or join', a=a, b=b)
            meet[a][b], join[a][b] = m, j
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    raise NotDistributive('a & (b | c) != (a & b) | (a & c)', a=a, b=b, c=c)
    imp = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            candidates = [z for z in range(n) if p.leq(meet[a][z], b)]
            best = candidates[0]
            for z in candidates[1:]:
                best = join[best][z]
            imp[a][b] = best
    return FiniteFrame(
        p,
        tuple(map(tuple, meet)),
        tuple(map(tuple, join)),
        tuple(map(tuple, imp)),
        p.top,
        p.bottom,
    )


@dataclass(frozen=True)
class Nucleus:
    map: EndoMap

    def fixpoints(self) -> Tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.map) if x == y)


def is_nucleus(f: FiniteFrame, j: EndoMap) -> bool:
    p = f.poset
    if not all(p.leq(x, j[x]) and j[j[x]] == j[x] for x in range(f.size)):
        return False
    return all(j[f.meet[a][b]] == f.meet[j[a]][j[b]] for a in range(f.size) for b in range(a + 1, f.size))


def nuclei(f: FiniteFrame) -> List[Nucleus]:
    """Every nucleus, in the enumeration order of monotone maps."""
    p = f.poset
    found = enumerate_monotone_endomaps(
        p,
        predicate=lambda j: is_nucleus(f, j),
        candidates=[list(iter_bits(p.up[x])) for x in range(p.size)],
    )
    return [Nucleus(j) for j in found]


def open_sublocale(f: FiniteFrame, a: int) -> Nucleus:
    return Nucleus(tuple(f.imp[a][x] for x in range(f.size)))


def closed_sublocale(f: FiniteFrame, a: int) -> Nucleus:
    return Nucleus(tuple(f.join[a][x] for x in range(f.size)))


@dataclass(frozen=True)
class SublocaleLattice:
    """Sublocales of a frame by inclusion: ``poset.leq(a, b)`` iff ``nuclei[b] <= nuclei[a]``."""

    frame: FiniteFrame
    nuclei: Tuple[Nucleus, ...]
    poset: Poset

    @cached_property
    def index(self) -> Dict[Nucleus, int]:
        return {j: k for k, j in enumerate(self.nuclei)}

    def least(self, candidates: List[int]) -> int:
        for k in candidates:
            if all(self.poset.leq(k, other) for other in candidates):
                return k
        raise VerificationError('no least sublocale among candidates', candidates=candidates)

    def greatest(self, candidates: List[int]) -> int:
        for k in candidates:
            if all(self.poset.leq(other, k) for other in candidates):
                return k
        raise VerificationError('no greatest sublocale among candidates', candidates=candidates)


@lru_cache(maxsize=None)
def sublocale_lattice(f: FiniteFrame) -> SublocaleLattice:
    """
    Raises:
        CoFrameViolation: the dual of the inclusion order is not a frame
    """
    js = tuple(nuclei(f))
    n = len(js)
    rel = np.array([[pointwise_leq(js[b].map, js[a].map, f.poset) for b in range(n)] for a in range(n)], dtype=bool)
    lattice = validate_poset(rel)
    try:
        check_frame(dual(lattice))
    except InputError as e:
        raise CoFrameViolation(f'sublocales do not form a co-frame: {e.message}', **e.details) from e
    return SublocaleLattice(f, js, lattice)


def localic_operators(f: FiniteFrame) -> Tuple[EndoMap, EndoMap, EndoMap]:
    """
    Closure, interior and supplement on the sublocale lattice.

    ``c(S)`` is the least closed sublocale containing ``S``, ``i(S)`` the largest open one
    inside it, and ``-S`` the least ``T`` whose join with ``S`` is everything.
    """
    lat = sublocale_lattice(f)
    p = lat.poset
    closed = sorted({lat.index[closed_sublocale(f, a)] for a in range(f.size)})
    opens = sorted({lat.index[open_sublocale(f, a)] for a in range(f.size)})
    whole = lat.index[Nucleus(tuple(range(f.size)))]
    c = tuple(lat.least([k for k in closed if p.leq(s, k)]) for s in range(p.size))
    i = tuple(lat.greatest([k for k in opens if p.leq(k, s)]) for s in range(p.size))
    neg = tuple(lat.least([t for t in range(p.size) if p.join(s, t) == whole]) for s in range(p.size))
    return c, i, neg


def largest_open_sublocale(f: FiniteFrame, j: Nucleus) -> Nucleus:
    """The open sublocale of the largest ``a`` whose open sublocale lies inside ``j``'s."""
    fits = (a for a in range(f.size) if pointwise_leq(j.map, open_sublocale(f, a).map, f.poset))
    return open_sublocale(f, f.join_all(fits))


def localic_monoid(f: FiniteFrame) -> OperatorMonoid:
    c, i, neg = localic_operators(f)
    return generate_monoid(sublocale_lattice(f).poset, dict(zip(ALPHABET, (i, c, neg))))


def _frame_from_ideals(ideals: List[int]) -> FiniteFrame:
    ideals = sorted(ideals, key=lambda s: (bin(s).count('1'), s))
    rel = np.array([[a & ~b == 0 for b in ideals] for a in ideals], dtype=bool)
    return check_frame(canonical(validate_poset(rel)))


def enumerate_frames(max_size: int) -> List[FiniteFrame]:
    """
    Every frame with at most ``max_size`` elements, up to isomorphism, sorted by size and code.

    Frames are the down-set lattices of finite posets. Posets are grown one maximal point at
    a time; adding a point adds at least one down-set, so growth stops at ``max_size``.
    """
    frames: List[Tuple[int, bytes, FiniteFrame]] = []
    level = [Poset(0, (), ())]
    while level:
        grown: Dict[bytes, Poset] = {}
        for q in level:
            ideals = list(order_ideals(q))
            if len(ideals) > max_size:
                continue
            frame = _frame_from_ideals(ideals)
            frames.append((frame.size, frame.poset.code, frame))
            if len(ideals) == max_size:
                continue
            for ideal in ideals:
                extended = add_maximal(q, ideal)
                code, _ = canonical_form(extended)
                grown.setdefault(code, extended)
        level = [grown[code] for code in sorted(grown)]
    frames.sort(key=lambda entry: entry[:2])
    logger.debug(f'{len(frames)} frames with at most {max_size} elements')
    return [frame for _, _, frame in frames]


def check_localic_laws(f: FiniteFrame) -> Dict[str, Any]:
    """Property checks for the sublocale operators of one frame; ``verified`` is their conjunction."""
    lat = sublocale_lattice(f)
    p = lat.poset
    c, i, neg = localic_operators(f)
    generators = dict(zip(ALPHABET, (i, c, neg)))

    def op(word: str) -> Tuple[int, ...]:
        return evaluate(parse_word(word), generators, p.size)

    largest_open = tuple(lat.index[largest_open_sublocale(f, j)] for j in lat.nuclei)
    monoid = localic_monoid(f)
    catalog = load_catalog('fig3_lower')
    failed_edges = [[lo, hi] for lo, hi in catalog.solid if not pointwise_leq(op(lo), op(hi), p)]
    catalog_maps = {op(word) for word in catalog.nodes}
    checks = {
        'nuclei_monotone': all(is_monotone(j.map, f.poset) for j in lat.nuclei),
        'i_is_neg_neg_i': op('--i') == i,
        'neg_c_neg_is_largest_open': op('-c-') == largest_open,
        'largest_open_is_i': largest_open == i,
        'chain_collapses': op('--i') == op('-c-') == op('i--') == i,
        'closure_of_open_complement': op('c-i') == op('-i'),
        'interior_of_closed_complement': op('i-c') == op('-c'),
        'monoid_bound': len(monoid) <= LOCALIC_BOUND,
        'monoid_in_catalog': all(g in catalog_maps for g in monoid.elements),
        'catalog_edges': not failed_edges,
    }
    return {
        'frame_size': f.size,
        'nuclei': len(lat.nuclei),
        'monoid_size': len(monoid),
        'checks': checks,
        'failed_edges': failed_edges,
        'verified': all(checks.values()),
    }
