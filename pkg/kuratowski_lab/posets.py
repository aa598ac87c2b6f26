"""
Finite posets, order-preserving self-maps, and enumeration up to isomorphism.

Points of an n-point poset are ``range(n)``. Internally every poset keeps, per point,
a bitmask of its up-set and of its down-set; the boolean relation matrix is exposed
as a read-only numpy array for the whole-relation checks.

Self-maps are plain tuples (``EndoMap``): ``f[x]`` is the image of ``x``. Words act
right to left, so ``compose(f, g)`` is ``x -> f(g(x))``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_logger
from .errors import BadRange, InputError, NotAntisymmetric, NotReflexive, NotTransitive, SizeMismatch

logger = get_logger(__name__)

EndoMap = Tuple[int, ...]
CanonicalCode = bytes


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """
    Immutable finite partial order.

    ``up[x]`` has bit ``y`` set iff ``x <= y``; ``down[x]`` has bit ``y`` set iff ``y <= x``.
    Build instances through :func:`validate_poset` or :func:`from_covers`.
    """

    size: int
    up: Tuple[int, ...]
    down: Tuple[int, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def strict_up(self, x: int) -> int:
        return self.up[x] & ~(1 << x)

    def strict_down(self, x: int) -> int:
        return self.down[x] & ~(1 << x)

    @cached_property
    def matrix(self) -> np.ndarray:
        'size x size read-only boolean matrix, matrix[x, y] iff x <= y'
        mat = np.zeros((self.size, self.size), dtype=bool)
        for x in range(self.size):
            for y in iter_bits(self.up[x]):
                mat[x, y] = True
        mat.flags.writeable = False
        return mat

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        'pairs (x, y) with y covering x, sorted'
        out = []
        for x in range(self.size):
            above = self.strict_up(x)
            for y in iter_bits(above):
                if not any(self.strict_up(z) >> y & 1 for z in iter_bits(above)):
                    out.append((x, y))
        return tuple(sorted(out))

    @cached_property
    def lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        lower: List[List[int]] = [[] for _ in range(self.size)]
        for x, y in self.covers:
            lower[y].append(x)
        return tuple(tuple(row) for row in lower)

    @cached_property
    def toposort(self) -> Tuple[int, ...]:
        'linear extension, smallest available point first'
        return tuple(sorted(range(self.size), key=lambda x: (bin(self.down[x]).count('1'), x)))

    def join(self, a: int, b: int) -> Optional[int]:
        """Least upper bound of ``a`` and ``b``, or None."""
        bounds = self.up[a] & self.up[b]
        for z in iter_bits(bounds):
            if self.up[z] & bounds == bounds:
                return z
        return None

    def meet(self, a: int, b: int) -> Optional[int]:
        """Greatest lower bound of ``a`` and ``b``, or None."""
        bounds = self.down[a] & self.down[b]
        for z in iter_bits(bounds):
            if self.down[z] & bounds == bounds:
                return z
        return None

    @cached_property
    def bottom(self) -> Optional[int]:
        full = (1 << self.size) - 1
        return next((x for x in range(self.size) if self.up[x] == full), None)

    @cached_property
    def top(self) -> Optional[int]:
        full = (1 << self.size) - 1
        return next((x for x in range(self.size) if self.down[x] == full), None)

    @cached_property
    def code(self) -> CanonicalCode:
        return canonical_form(self)[0]

    def __repr__(self) -> str:
        return f'Poset(size={self.size}, covers={list(self.covers)})'


def _from_matrix(mat: np.ndarray) -> Poset:
    n = mat.shape[0]
    up = tuple(sum(1 << int(y) for y in np.flatnonzero(mat[x])) for x in range(n))
    down = tuple(sum(1 << int(x) for x in np.flatnonzero(mat[:, y])) for y in range(n))
    return Poset(n, up, down)


def validate_poset(relation: Any) -> Poset:
    """
    Check the three order axioms and build a Poset.

    Args:
        relation: square boolean matrix (nested sequences or numpy array), relation[x][y] iff x <= y

    Returns:
        The Poset

    Raises:
        SizeMismatch: the relation is not square or is empty
        NotReflexive / NotAntisymmetric / NotTransitive: with a witness in ``details``
    """
    rel = np.asarray(relation, dtype=bool)
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1] or rel.shape[0] == 0:
        raise SizeMismatch('relation must be a non-empty square matrix', shape=list(rel.shape))
    n = rel.shape[0]

    diag = np.diagonal(rel)
    if not diag.all():
        x = int(np.flatnonzero(~diag)[0])
        raise NotReflexive(f'{x} is not below itself', pair=[x, x])

    both = rel & rel.T & ~np.eye(n, dtype=bool)
    if both.any():
        x, y = (int(v) for v in np.argwhere(both)[0])
        raise NotAntisymmetric(f'{x} <= {y} and {y} <= {x}', pair=[x, y])

    missing = np.matmul(rel, rel) & ~rel
    if missing.any():
        x, z = (int(v) for v in np.argwhere(missing)[0])
        y = int(np.flatnonzero(rel[x] & rel[:, z])[0])
        raise NotTransitive(f'{x} <= {y} <= {z} but not {x} <= {z}', triple=[x, y, z])

    return _from_matrix(rel)


def from_covers(n: int, covers: Iterable[Sequence[int]]) -> Poset:
    """
    Build a poset from generating pairs ``(a, b)`` meaning ``a <= b``.

    The reflexive-transitive closure is taken; a cycle raises NotAntisymmetric.
    """
    if n < 1:
        raise SizeMismatch('a poset needs at least one point', n=n)
    rel = np.eye(n, dtype=bool)
    for pair in covers:
        a, b = int(pair[0]), int(pair[1])
        if not (0 <= a < n and 0 <= b < n):
            raise SizeMismatch(f'pair {[a, b]} outside 0..{n - 1}', pair=[a, b])
        rel[a, b] = True
    for k in range(n):
        rel |= rel[:, k, None] & rel[None, k, :]
    return validate_poset(rel)


def chain(n: int) -> Poset:
    return from_covers(n, [(k, k + 1) for k in range(n - 1)])


def antichain(n: int) -> Poset:
    return from_covers(n, [])


def dual(p: Poset) -> Poset:
    return Poset(p.size, p.down, p.up)


def relabel(p: Poset, order: Sequence[int]) -> Poset:
    """New poset whose point ``k`` is the old point ``order[k]``."""
    index = np.asarray(order)
    return _from_matrix(p.matrix[np.ix_(index, index)])


def poset_to_json(p: Poset) -> Dict[str, Any]:
    return {'n': p.size, 'covers': [list(pair) for pair in p.covers]}


def poset_from_json(obj: Dict[str, Any]) -> Poset:
    try:
        n = int(obj['n'])
        covers = obj.get('covers', [])
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise InputError(f'poset needs an integer "n": {e!r}', field='n') from e
    return from_covers(n, covers)


# Self-maps


def identity(n: int) -> EndoMap:
    return tuple(range(n))


def constant(n: int, value: int) -> EndoMap:
    return (value,) * n


def check_map(f: Sequence[int], size: int) -> EndoMap:
    """Validate totality of ``f`` on ``range(size)`` and return it as a tuple."""
    if isinstance(f, (str, bytes, dict)) or not all(isinstance(v, (int, np.integer)) for v in f):
        raise InputError('a map is a list of integer images', got=repr(f))
    if len(f) != size:
        raise SizeMismatch(f'map has {len(f)} entries, carrier has {size}', expected=size, got=len(f))
    for x, fx in enumerate(f):
        if not 0 <= fx < size:
            raise SizeMismatch(f'image of {x} is {fx}, outside the carrier', point=x, image=fx)
    return tuple(int(v) for v in f)


def map_to_json(f: EndoMap) -> Dict[str, Any]:
    return {'img': list(f)}


def map_from_json(obj: Dict[str, Any], size: int) -> EndoMap:
    if not isinstance(obj, dict) or 'img' not in obj:
        raise InputError('map needs an "img" list', field='img')
    return check_map(obj['img'], size)


def compose(f: EndoMap, g: EndoMap) -> EndoMap:
    """``x -> f(g(x))``."""
    if len(f) != len(g):
        raise SizeMismatch('maps on different carriers', left=len(f), right=len(g))
    return tuple(f[y] for y in g)


def power(f: EndoMap, k: int) -> EndoMap:
    if k < 1:
        raise BadRange('power needs k >= 1', k=k)
    result = f
    for _ in range(k - 1):
        result = tuple(f[y] for y in result)
    return result


def is_monotone(f: EndoMap, p: Poset) -> bool:
    if len(f) != p.size:
        raise SizeMismatch('map and poset sizes differ', map=len(f), poset=p.size)
    for x in range(p.size):
        target = p.up[f[x]]
        for y in iter_bits(p.strict_up(x)):
            if not target >> f[y] & 1:
                return False
    return True


def pointwise_leq(f: EndoMap, g: EndoMap, p: Poset) -> bool:
    if len(f) != p.size or len(g) != p.size:
        raise SizeMismatch('map and poset sizes differ', left=len(f), right=len(g), poset=p.size)
    return all(p.up[a] >> b & 1 for a, b in zip(f, g))


def is_closure(f: EndoMap, p: Poset) -> bool:
    """Monotone, inflationary and idempotent."""
    return is_monotone(f, p) and pointwise_leq(identity(p.size), f, p) and compose(f, f) == f


def is_interior(f: EndoMap, p: Poset) -> bool:
    """Monotone, deflationary and idempotent."""
    return is_monotone(f, p) and pointwise_leq(f, identity(p.size), p) and compose(f, f) == f


def circular_shift(u: int, v: int, size: Optional[int] = None) -> EndoMap:
    """
    The cycle ``u -> u+1 -> ... -> v -> u`` on ``range(size)``.

    Points outside ``u..v`` are fixed; ``size`` defaults to ``v + 1``.
    """
    if u < 0 or u >= v:
        raise BadRange('circular shift needs 0 <= u < v', u=u, v=v)
    size = v + 1 if size is None else size
    if size <= v:
        raise BadRange('carrier too small for the shift', size=size, v=v)
    return tuple(u if k == v else k + 1 if u <= k < v else k for k in range(size))


def enumerate_monotone_endomaps(
    p: Poset,
    predicate: Optional[Callable[[EndoMap], bool]] = None,
    candidates: Optional[Sequence[Iterable[int]]] = None,
) -> Iterator[EndoMap]:
    """
    Every order-preserving self-map of ``p`` accepted by ``predicate``, each once.

    Points are assigned along ``p.toposort``; a point's image must lie above the images of
    its lower covers and inside ``candidates[x]`` when candidate sets are given.
    The order of the stream is deterministic.
    """
    n = p.size
    full = (1 << n) - 1
    if candidates is None:
        allowed = [full] * n
    else:
        if len(candidates) != n:
            raise SizeMismatch('one candidate set per point expected', expected=n, got=len(candidates))
        allowed = [sum(1 << int(v) for v in cand) for cand in candidates]
    order = p.toposort
    lower = p.lower_covers
    f = [0] * n

    def backtrack(k: int) -> Iterator[EndoMap]:
        if k == n:
            image = tuple(f)
            if predicate is None or predicate(image):
                yield image
            return
        x = order[k]
        mask = allowed[x]
        for u in lower[x]:
            mask &= p.up[f[u]]
        for value in iter_bits(mask):
            f[x] = value
            yield from backtrack(k + 1)

    yield from backtrack(0)


# Canonical form


def _encode(p: Poset, order: Sequence[int]) -> CanonicalCode:
    index = np.asarray(order)
    mat = p.matrix[np.ix_(index, index)]
    off_diagonal = mat[~np.eye(p.size, dtype=bool)]
    return bytes([p.size]) + np.packbits(off_diagonal).tobytes()


def _refine(p: Poset, colours: List[int]) -> List[int]:
    while True:
        signatures = [
            (
                colours[x],
                tuple(sorted(colours[y] for y in iter_bits(p.strict_down(x)))),
                tuple(sorted(colours[y] for y in iter_bits(p.strict_up(x)))),
            )
            for x in range(p.size)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(colours)):
            return refined
        colours = refined


def _twins(p: Poset, x: int, y: int) -> bool:
    return not p.comparable(x, y) and p.strict_down(x) == p.strict_down(y) and p.strict_up(x) == p.strict_up(y)


def canonical_form(p: Poset) -> Tuple[CanonicalCode, Tuple[int, ...]]:
    """
    Canonical code of ``p`` and the ordering of its points that produces it.

    Colour refinement on (colour, strict-down colours, strict-up colours), then
    individualisation of each point of the first non-singleton cell; the least code
    over all leaves wins. Incomparable twins are interchangeable, so only one of them
    is individualised per cell.
    """
    best: List[Any] = [None, None]

    def search(colours: List[int]) -> None:
        colours = _refine(p, colours)
        cells: Dict[int, List[int]] = {}
        for x, c in enumerate(colours):
            cells.setdefault(c, []).append(x)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = tuple(sorted(range(p.size), key=lambda x: colours[x]))
            code = _encode(p, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        tried: List[int] = []
        for v in target:
            if any(_twins(p, v, w) for w in tried):
                continue
            tried.append(v)
            search([2 * c if x == v else 2 * c + 1 for x, c in enumerate(colours)])

    search([0] * p.size)
    return best[0], best[1]


def canonical_code_bruteforce(p: Poset) -> CanonicalCode:
    """Least code over every ordering of the points."""
    return min(_encode(p, order) for order in permutations(range(p.size)))


def canonical(p: Poset) -> Poset:
    return relabel(p, canonical_form(p)[1])


def order_ideals(p: Poset) -> Iterator[int]:
    """Down-closed subsets as bitmasks, in increasing numeric order."""
    for subset in range(1 << p.size):
        if all(p.down[x] & subset == p.down[x] for x in iter_bits(subset)):
            yield subset


def add_maximal(p: Poset, ideal: int) -> Poset:
    """Extend ``p`` by a new point whose strict down-set is ``ideal``."""
    n = p.size
    new = 1 << n
    up = tuple(u | new if ideal >> x & 1 else u for x, u in enumerate(p.up)) + (new,)
    down = p.down + (ideal | new,)
    return Poset(n + 1, up, down)


@lru_cache(maxsize=None)
def _poset_level(n: int, method: str) -> Tuple[Poset, ...]:
    if n == 1:
        return (antichain(1),)
    found: Dict[CanonicalCode, Poset] = {}
    for p in _poset_level(n - 1, method):
        for ideal in order_ideals(p):
            q = add_maximal(p, ideal)
            if method == 'refine':
                code, order = canonical_form(q)
                if code not in found:
                    found[code] = relabel(q, order)
            else:
                code = canonical_code_bruteforce(q)
                if code not in found:
                    found[code] = q
    level = tuple(found[code] for code in sorted(found))
    logger.debug(f'{len(level)} posets on {n} points ({method})')
    return level


def enumerate_posets(n: int, method: str = 'refine') -> Iterator[Poset]:
    """
    One poset per isomorphism class on ``n`` points, sorted by canonical code.

    Each class is produced by adding a new maximal point above an order ideal of a smaller
    poset. ``method='refine'`` dedups with :func:`canonical_form` and yields canonically
    relabelled posets; ``method='bruteforce'`` dedups by :func:`canonical_code_bruteforce`
    and is only practical for small ``n``.

    Levels are computed once per process and kept: each level seeds the next, and
    deduplication needs every canonical code of the level. Maps and instances on top of
    the posets are generated one poset at a time and never collected across a level.
    """
    if n < 1:
        raise BadRange('poset size must be positive', n=n)
    if method not in ('refine', 'bruteforce'):
        raise BadRange(f'unknown enumeration method {method!r}', method=method)
    yield from _poset_level(n, method)


def enumerate_posets_upto(max_points: int) -> Iterator[Poset]:
    for n in range(1, max_points + 1):
        yield from enumerate_posets(n)
