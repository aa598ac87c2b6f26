"""
Normal forms, multiplication and order for the semigroups C(m, n).

C(m, n) is generated by two letters ``s <= t`` with ``s^m = s`` and ``t^n = t``. With
``d = gcd(m-1, n-1)`` every element has exactly one representative in

    W(m, n) = {s^a : 1 <= a < m} + {t^a : 1 <= a < n}
              + {s^j t, s^j t s, t^j s, t^j s t : 1 <= j <= d}

and the product of two representatives depends only on the total length and on
the first letter of the left factor and the last letter of the right factor.
Words are plain strings over ``'s'`` and ``'t'``.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from .config import get_logger
from .diagrams import DiagramCatalog
from .errors import (
    EmptyWord,
    InputError,
    InvalidParams,
    ParamMismatch,
    StabilizationError,
    UnknownLetter,
    VerificationError,
)
from .posets import Poset, validate_poset

logger = get_logger(__name__)

LETTERS = 'st'


@dataclass(frozen=True)
class Params:
    m: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise InvalidParams('m and n must be integers', m=self.m, n=self.n)
        if self.m < 2 or self.n < 2:
            raise InvalidParams('m and n must be at least 2', m=self.m, n=self.n)
        if self.m > self.n:
            raise InvalidParams('m must not exceed n; negate words and swap the parameters', m=self.m, n=self.n)

    @property
    def d(self) -> int:
        return math.gcd(self.m - 1, self.n - 1)

    @property
    def ell(self) -> int:
        return (self.m - 1) * (self.n - 1) // self.d

    def __str__(self) -> str:
        return f'C({self.m},{self.n})'

    def key(self) -> str:
        return f'{self.m},{self.n}'


def _r(k: int, x: int) -> int:
    return 1 + (x - 1) % k


def check_word(word: str) -> str:
    if not word:
        raise EmptyWord('words must be nonempty')
    for letter in word:
        if letter not in LETTERS:
            raise UnknownLetter(f'letter {letter!r} is not s or t', letter=letter, word=word)
    return word


def negate(word: str) -> str:
    """Swap ``s`` and ``t`` letter by letter."""
    return check_word(word).translate(str.maketrans('st', 'ts'))


@lru_cache(maxsize=None)
def wset(p: Params) -> Tuple[str, ...]:
    """W(m, n) in fixed order: s-powers, t-powers, then mixed forms by j."""
    out = ['s' * a for a in range(1, p.m)] + ['t' * a for a in range(1, p.n)]
    for j in range(1, p.d + 1):
        out += ['s' * j + 't', 's' * j + 'ts', 't' * j + 's', 't' * j + 'st']
    return tuple(out)


@lru_cache(maxsize=None)
def windex(p: Params) -> Dict[str, int]:
    return {w: k for k, w in enumerate(wset(p))}


def _member(word: str, p: Params) -> str:
    if word not in windex(p):
        raise ParamMismatch(f'{word!r} is not a normal form of {p}', word=word, m=p.m, n=p.n)
    return word


def _product(a: str, b: str, p: Params) -> str:
    length = len(a) + len(b)
    if 't' not in a and 't' not in b:
        return 's' * _r(p.m - 1, length)
    if 's' not in a and 's' not in b:
        return 't' * _r(p.n - 1, length)
    u, v = _r(p.d, length - 2), _r(p.d, length - 1)
    first, last = a[0], b[-1]
    if first == 't':
        return 't' * u + 'st' if last == 't' else 't' * v + 's'
    return 's' * v + 't' if last == 't' else 's' * u + 'ts'


def multiply(a: str, b: str, p: Params) -> str:
    """Normal form of the concatenation of two normal forms."""
    return _product(_member(a, p), _member(b, p), p)


def normal_form(word: str, p: Params) -> str:
    """Representative of ``word`` in W(m, n), folding letters left to right."""
    check_word(word)
    result = word[0]
    for letter in word[1:]:
        result = _product(result, letter, p)
    return result


def equivalent(w1: str, w2: str, m: int, n: int) -> bool:
    """Whether two words are equal in C(m, n); ``m > n`` is handled by negation."""
    if m > n:
        return equivalent(negate(w1), negate(w2), n, m)
    p = Params(m, n)
    return normal_form(w1, p) == normal_form(w2, p)


@lru_cache(maxsize=None)
def multiplication_table(p: Params) -> Tuple[Tuple[int, ...], ...]:
    words, index = wset(p), windex(p)
    return tuple(tuple(index[_product(a, b, p)] for b in words) for a in words)


def diamond_generators(k: int) -> List[Tuple[str, str]]:
    """Inequalities of the k-th diamond, as raw words."""
    if k == 1:
        return [('s', 't')]
    if k == 2:
        return [('ss', 'st'), ('ss', 'ts'), ('st', 'tt'), ('ts', 'tt')]
    s, t = 's', 't'
    middle = s * (k - 2) + 'ts'
    left, right = s * (k - 1) + t, t * (k - 1) + s
    top = t * (k - 2) + 'st'
    return [(s * k, middle), (middle, left), (middle, right), (left, top), (right, top), (top, t * k)]


def _closed_relation(p: Params, max_k: int) -> np.ndarray:
    index = windex(p)
    size = len(index)
    rel = np.eye(size, dtype=bool)
    for k in range(1, max_k + 1):
        for lo, hi in diamond_generators(k):
            rel[index[normal_form(lo, p)], index[normal_form(hi, p)]] = True
    for j in range(size):
        rel |= rel[:, j, None] & rel[None, j, :]
    return rel


@lru_cache(maxsize=None)
def order_poset(p: Params) -> Poset:
    """
    The general order of C(m, n) on W(m, n) indices.

    Diamonds are instantiated up to ``2*ell + 4``; the closure must not change when
    ``d`` more diamonds are added.

    Raises:
        StabilizationError: the relation still grows past the bound
    """
    bound = 2 * p.ell + 4
    rel = _closed_relation(p, bound)
    check = _closed_relation(p, bound + p.d)
    if not np.array_equal(rel, check):
        raise StabilizationError(f'order of {p} not stable at k={bound}', m=p.m, n=p.n, bound=bound)
    try:
        return validate_poset(rel)
    except InputError as e:
        raise VerificationError(f'diamond relation of {p} is not a partial order', m=p.m, n=p.n) from e


def leq(a: str, b: str, p: Params) -> bool:
    index = windex(p)
    return order_poset(p).leq(index[_member(a, p)], index[_member(b, p)])


def hasse(p: Params) -> DiagramCatalog:
    """Hasse diagram of the general order on W(m, n)."""
    words = wset(p)
    edges = tuple((words[a], words[b], 'solid') for a, b in order_poset(p).covers)
    return DiagramCatalog(f'C{p.m}{p.n}', words, edges, ('s', 't'))


def idempotent_exponent(p: Params) -> int:
    """Least k > 1 with (st)^k = st and (ts)^k = ts."""
    d = p.d
    return d // 2 + 1 if d % 2 == 0 else d + 1


def idempotent_exponent_search(p: Params, limit: Optional[int] = None) -> Optional[int]:
    """The same exponent found by computing powers of ``st`` and ``ts`` symbolically."""
    limit = limit or 2 * p.d + 2
    st, ts = normal_form('st', p), normal_form('ts', p)
    for k in range(2, limit + 1):
        if normal_form('st' * k, p) == st and normal_form('ts' * k, p) == ts:
            return k
    return None


def embeds(source: Params, target: Params) -> bool:
    """Every C(source) instance is a C(target) instance."""
    return (target.m - 1) % (source.m - 1) == 0 and (target.n - 1) % (source.n - 1) == 0


def word_length_parity(a: str, b: str) -> str:
    return 'even' if (len(a) - len(b)) % 2 == 0 else 'odd'

