"""
Tests for the C(m, n) word engine: normal forms, products, order and exponents.

Products are checked three ways: against the closed-form rule, against the
rewriting oracle in ``tests.rewriting``, and against concrete instances.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuratowski_lab.catalogs import load_fig5
from kuratowski_lab.chittenden import (
    Params,
    embeds,
    equivalent,
    hasse,
    idempotent_exponent,
    idempotent_exponent_search,
    leq,
    multiplication_table,
    multiply,
    negate,
    normal_form,
    order_poset,
    wset,
)
from kuratowski_lab.collapses import enumerate_instances
from kuratowski_lab.errors import EmptyWord, InvalidParams, ParamMismatch, UnknownLetter
from kuratowski_lab.monoid import evaluate
from kuratowski_lab.posets import (
    chain,
    circular_shift,
    compose,
    constant,
    enumerate_posets_upto,
    from_covers,
    is_monotone,
    pointwise_leq,
    power,
)
from tests.rewriting import oracle_normal_forms

SMALL_PARAMS = [Params(2, 2), Params(2, 3), Params(3, 3)]
ALL_PARAMS = [Params(m, n) for n in range(2, 6) for m in range(2, n + 1)]

words_st = st.text(alphabet='st', min_size=1, max_size=12)


def _words_upto(length):
    for k in range(1, length + 1):
        for letters in itertools.product('st', repeat=k):
            yield ''.join(letters)


class TestParams:
    def test_derived_values(self):
        p = Params(3, 5)
        assert (p.d, p.ell) == (2, 4)
        assert p.d * p.ell == (p.m - 1) * (p.n - 1)
        assert str(Params(2, 3)) == 'C(2,3)'

    @pytest.mark.parametrize('m,n', [(1, 3), (3, 1), (4, 3), (2.0, 3)])
    def test_invalid(self, m, n):
        with pytest.raises(InvalidParams):
            Params(m, n)


class TestWords:
    def test_w33(self):
        assert wset(Params(3, 3)) == (
            's', 'ss', 't', 'tt', 'st', 'sts', 'ts', 'tst', 'sst', 'ssts', 'tts', 'ttst',
        )

    def test_w22_and_w23(self):
        assert set(wset(Params(2, 2))) == {'s', 't', 'st', 'sts', 'ts', 'tst'}
        assert len(wset(Params(2, 3))) == 7

    @pytest.mark.parametrize('p', ALL_PARAMS, ids=str)
    def test_size(self, p):
        assert len(wset(p)) == (p.m - 1) + (p.n - 1) + 4 * p.d

    def test_containment_in_square_params(self):
        for n in range(2, 7):
            for m in range(2, n + 1):
                assert set(wset(Params(m, n))) <= set(wset(Params(n, n))), (m, n)

    def test_negate(self):
        assert negate('sts') == 'tst'
        assert negate(negate('sstst')) == 'sstst'
        with pytest.raises(UnknownLetter):
            negate('sx')

    def test_bad_words(self):
        with pytest.raises(EmptyWord):
            normal_form('', Params(2, 2))
        with pytest.raises(UnknownLetter):
            normal_form('sut', Params(2, 2))


class TestProducts:
    def test_examples(self):
        p = Params(3, 3)
        assert multiply('t', 's', Params(2, 2)) == 'ts'
        assert multiply('ss', 'st', p) == 'st'
        assert multiply('st', 'ts', p) == 'ssts'

    def test_normal_form_examples(self):
        p = Params(3, 3)
        assert normal_form('s', p) == 's'
        assert normal_form('tss', p) == 'tts'
        assert normal_form('stst', p) == 'st'

    def test_operands_must_be_normal_forms(self):
        with pytest.raises(ParamMismatch):
            multiply('sss', 's', Params(3, 3))

    @pytest.mark.parametrize('p', ALL_PARAMS, ids=str)
    def test_normal_forms_are_fixed(self, p):
        assert all(normal_form(w, p) == w for w in wset(p))

    @pytest.mark.parametrize('p', ALL_PARAMS, ids=str)
    def test_associative(self, p):
        table = multiplication_table(p)
        size = len(table)
        for a, b, c in itertools.product(range(size), repeat=3):
            assert table[table[a][b]][c] == table[a][table[b][c]]

    @pytest.mark.parametrize('p', ALL_PARAMS, ids=str)
    def test_defining_relations(self, p):
        assert normal_form('s' * (3 * p.ell + 1), p) == 's'
        for w in _words_upto(6):
            assert normal_form('s' + w + 't', p) == normal_form('s' + 't' * (len(w) + 1), p)

    @settings(max_examples=60, deadline=None)
    @given(words_st, words_st)
    def test_fold_respects_concatenation(self, u, v):
        p = Params(3, 5)
        assert normal_form(u + v, p) == multiply(normal_form(u, p), normal_form(v, p), p)

    @settings(max_examples=60, deadline=None)
    @given(words_st, words_st)
    def test_negation_transports_equivalence(self, u, v):
        assert equivalent(u, v, 3, 2) == equivalent(negate(u), negate(v), 2, 3)

    def test_equivalent_with_swapped_params(self):
        assert equivalent('sss', 's', 3, 2)
        assert not equivalent('ss', 's', 3, 2)
        assert equivalent('ss', 's', 2, 3)


class TestRewritingOracle:
    @pytest.mark.parametrize('p', SMALL_PARAMS, ids=str)
    def test_short_words(self, p):
        for word in _words_upto(4):
            assert oracle_normal_forms(word, p) == {normal_form(word, p)}, word


class TestInstances:
    @pytest.mark.parametrize('p', SMALL_PARAMS, ids=str)
    def test_products_match_composition(self, p):
        words = wset(p)
        for inst in itertools.chain.from_iterable(enumerate_instances(q, p) for q in enumerate_posets_upto(3)):
            maps = dict(zip(words, inst.maps))
            for a, b in itertools.product(words, repeat=2):
                assert maps[multiply(a, b, p)] == compose(maps[a], maps[b])

    @pytest.mark.parametrize('p', SMALL_PARAMS, ids=str)
    def test_order_is_sound(self, p):
        words = wset(p)
        pairs = [(a, b) for a in words for b in words if leq(a, b, p)]
        for inst in itertools.chain.from_iterable(enumerate_instances(q, p) for q in enumerate_posets_upto(3)):
            maps = dict(zip(words, inst.maps))
            for a, b in pairs:
                assert pointwise_leq(maps[a], maps[b], inst.poset)

    def test_separating_counterexamples(self):
        p = chain(3)
        gens = {'s': (0, 0, 2), 't': (0, 2, 2)}
        for w in ['', *_words_upto(6)]:
            assert evaluate(w + 't', gens, 3)[1] == 2
            assert evaluate(w + 's', gens, 3)[1] == 0
        assert pointwise_leq(gens['s'], gens['t'], p)

    @pytest.mark.parametrize(
        'gens,lhs,rhs',
        [
            # t^k is never below tsw
            ({'s': (0, 0), 't': (0, 1)}, lambda w, k: 't' * k, lambda w, k: 'ts' + w),
            # stw is never below s^k
            ({'s': (0, 1), 't': (1, 1)}, lambda w, k: 'st' + w, lambda w, k: 's' * k),
            # tw is never below sw'
            ({'s': (0, 0), 't': (1, 1)}, lambda w, k: 't' + w, lambda w, k: 's' + w[::-1]),
        ],
        ids=['t-power', 'st-prefix', 't-prefix'],
    )
    def test_constant_maps_refute_inequalities(self, gens, lhs, rhs):
        p = chain(2)
        assert pointwise_leq(gens['s'], gens['t'], p)
        for w in ['', *_words_upto(4)]:
            for k in range(1, 4):
                assert not pointwise_leq(evaluate(lhs(w, k), gens, 2), evaluate(rhs(w, k), gens, 2), p), (w, k)

    @pytest.mark.parametrize('q', [2, 3, 4, 5])
    def test_leaf_shift_on_star(self, q):
        star = from_covers(q + 1, [(0, leaf) for leaf in range(1, q + 1)])
        s = constant(q + 1, 0)
        t = circular_shift(1, q)
        assert is_monotone(t, star)
        assert pointwise_leq(s, t, star)
        for k in range(1, 3 * q + 2):
            assert (power(t, k) == t) == (k % q == 1 % q), k


class TestOrder:
    def test_examples(self):
        p = Params(3, 3)
        assert leq('ss', 'tt', p)
        assert not leq('s', 'ss', p)
        for q in ALL_PARAMS:
            assert leq('s', 't', q)
            assert not leq('t', 's', q)

    def test_c22_chain_of_diamonds(self):
        p = Params(2, 2)
        assert set(order_poset(p).covers) == {
            (wset(p).index(a), wset(p).index(b))
            for a, b in [('s', 'sts'), ('sts', 'st'), ('sts', 'ts'), ('st', 'tst'), ('ts', 'tst'), ('tst', 't')]
        }

    def test_hasse_matches_transcriptions(self):
        for (m, n), edges in load_fig5().items():
            d = hasse(Params(m, n))
            assert set(d.solid) == edges, (m, n)

    def test_t_is_never_below_s_words(self):
        p = Params(3, 5)
        for a in wset(p):
            for b in wset(p):
                if a.startswith('t') and b.startswith('s'):
                    assert not leq(a, b, p)


class TestExponents:
    @pytest.mark.parametrize('m,n,k', [(3, 3, 2), (4, 4, 4), (5, 5, 3), (2, 2, 2), (3, 5, 2)])
    def test_formula(self, m, n, k):
        assert idempotent_exponent(Params(m, n)) == k

    @pytest.mark.parametrize('p', ALL_PARAMS + [Params(6, 6), Params(7, 7)], ids=str)
    def test_search_agrees(self, p):
        assert idempotent_exponent_search(p) == idempotent_exponent(p)

    def test_embeddings(self):
        assert embeds(Params(2, 2), Params(3, 3))
        assert embeds(Params(3, 3), Params(5, 5))
        assert not embeds(Params(3, 3), Params(4, 4))
