"""
Test-only rewriting oracle for C(m, n).

Relations of C(m, n) are applied in both directions, breadth first, over words no longer
than ``len(word) + ell + 2``. Whatever normal form turns up in the explored class is the
oracle's answer; the production code never goes through here.
"""

from collections import deque
from itertools import product
from typing import List, Set, Tuple

from kuratowski_lab.chittenden import Params, windex


def relations(p: Params) -> List[Tuple[str, str]]:
    rules = [('s' * p.m, 's'), ('t' * p.n, 't'), ('sst', 'stt'), ('tss', 'tts')]
    rules += [('s' * (p.d + 1) + 't', 'st'), ('t' * (p.d + 1) + 's', 'ts')]
    for letters in product('st', repeat=p.ell + 1):
        w = ''.join(letters)
        rules += [('s' + w + 't', 'stt'), ('t' + w + 's', 'tts')]
    return rules


def equivalence_class(word: str, p: Params) -> Set[str]:
    bound = len(word) + p.ell + 2
    rules = relations(p)
    rules += [(rhs, lhs) for lhs, rhs in rules]
    seen = {word}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for lhs, rhs in rules:
            start = current.find(lhs)
            while start != -1:
                candidate = current[:start] + rhs + current[start + len(lhs):]
                if len(candidate) <= bound and candidate not in seen:
                    seen.add(candidate)
                    queue.append(candidate)
                start = current.find(lhs, start + 1)
    return seen


def oracle_normal_forms(word: str, p: Params) -> Set[str]:
    """Members of W(m, n) reachable from ``word``; a sound oracle finds exactly one."""
    index = windex(p)
    return {w for w in equivalence_class(word, p) if w in index}
