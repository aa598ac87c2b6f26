"""
Tests for the eighteen-label Kuratowski catalog and instance classification.
"""

import itertools

import pytest

from kuratowski_lab.errors import NotAClosure, NotAnInterior, UnknownLetter
from kuratowski_lab.kuratowski import (
    classify,
    classify_exhaustive,
    closures,
    dual_instance_label,
    dual_label,
    interiors,
    k_words,
    kuratowski_catalog,
    label,
    realize_labels,
    reduce_k_word,
)
from kuratowski_lab.posets import antichain, enumerate_posets, identity, poset_from_json, relabel

LABELS = ['1', '2', '2d', '3', '4', '5', '5d', '6', '6d', '7', '8', '8d', '9', '10', '10d', '11', '12', '13']


def _relabel_instance(p, c, i, order):
    inverse = {old: new for new, old in enumerate(order)}
    def move(f):
        return tuple(inverse[f[old]] for old in order)

    return relabel(p, order), move(c), move(i)


class TestWords:
    def test_seven_words(self):
        words = k_words()
        assert len(words) == 7
        assert words[0] == 'id'
        assert 'cic' in words and 'ici' in words
        assert 'cici' not in words

    @pytest.mark.parametrize(
        'word,reduced',
        [('id', ''), ('cc', 'c'), ('iii', 'i'), ('icic', 'ic'), ('cicic', 'cic'), ('ciiccii', 'ci'), ('icici', 'ici')],
    )
    def test_reduce(self, word, reduced):
        assert reduce_k_word(word) == reduced

    def test_reduce_rejects_other_letters(self):
        with pytest.raises(UnknownLetter):
            reduce_k_word('c-i')


class TestCatalog:
    def test_eighteen_distinct_labels(self):
        catalog = kuratowski_catalog()
        assert [entry.name for entry in catalog] == LABELS
        assert len({entry.key() for entry in catalog}) == 18

    def test_extremes(self):
        assert label('1').cardinality == 7
        assert label('13').cardinality == 1
        assert label('10').partition == (('', 'c'), ('i', 'ic', 'ci', 'ici', 'cic'))

    def test_duality_is_an_involution(self):
        for entry in kuratowski_catalog():
            assert dual_label(entry.dual) == entry.name
            assert label(entry.dual).cardinality == entry.cardinality

    def test_partitions_are_congruences(self):
        for entry in kuratowski_catalog():
            block_of = {w: k for k, block in enumerate(entry.partition) for w in block}
            for block in entry.partition:
                for u, v in itertools.combinations(block, 2):
                    for x in 'ci':
                        assert block_of[reduce_k_word(x + u)] == block_of[reduce_k_word(x + v)], entry.name
                        assert block_of[reduce_k_word(u + x)] == block_of[reduce_k_word(v + x)], entry.name

    def test_unknown_label(self):
        with pytest.raises(KeyError):
            label('14')


class TestClassify:
    def test_identity_pair_is_discrete(self, vee):
        assert classify(vee, identity(3), identity(3)).name == '13'

    def test_single_point(self):
        assert classify(antichain(1), (0,), (0,)).name == '13'

    def test_two_chain(self, chain2):
        assert classify(chain2, (0, 1), (0, 0)).name == '10'
        assert classify(chain2, (1, 1), (0, 1)).name == '10d'
        found = classify(chain2, (1, 1), (0, 0))
        assert found.name == '11'
        assert found.partition == (('',), ('i', 'ic', 'ici'), ('c', 'ci', 'cic'))

    def test_rejects_non_operators(self, chain2):
        with pytest.raises(NotAClosure):
            classify(chain2, (0, 0), (0, 0))
        with pytest.raises(NotAnInterior):
            classify(chain2, (1, 1), (1, 1))

    def test_closures_and_interiors_of_chain(self, chain2):
        assert closures(chain2) == [(0, 1), (1, 1)]
        assert interiors(chain2) == [(0, 0), (0, 1)]

    def test_duality_swaps_partner_labels(self):
        for n in (2, 3):
            for p in enumerate_posets(n):
                for c in closures(p):
                    for i in interiors(p):
                        name = classify(p, c, i).name
                        assert dual_instance_label(p, c, i) == dual_label(name)

    def test_isomorphism_invariance(self):
        for p in enumerate_posets(3):
            for c in closures(p):
                for i in interiors(p):
                    name = classify(p, c, i).name
                    for order in itertools.permutations(range(3)):
                        assert classify(*_relabel_instance(p, c, i, order)).name == name


class TestSearch:
    def test_exhaustive_two_points(self):
        assert classify_exhaustive(2) == {'13': 3, '10': 1, '10d': 1, '11': 1}

    def test_exhaustive_three_points_never_unclassified(self):
        counts = classify_exhaustive(3)
        assert set(counts) <= set(LABELS)

    @pytest.mark.slow
    def test_exhaustive_four_points_never_unclassified(self):
        assert set(classify_exhaustive(4)) <= set(LABELS)

    def test_realize_small(self):
        report = realize_labels(2)
        assert report['minimal_sizes'] == {'10': 2, '10d': 2, '11': 2, '13': 1}
        assert report['labels']['13'] == {'points': 1, 'poset': {'n': 1, 'covers': []}, 'c': [0], 'i': [0]}
        assert set(report['missing']) == set(LABELS) - {'10', '10d', '11', '13'}

    def test_realized_witnesses_classify(self):
        report = realize_labels(3)
        for name, witness in report['labels'].items():
            p = poset_from_json(witness['poset'])
            assert classify(p, tuple(witness['c']), tuple(witness['i'])).name == name
            assert witness['points'] == report['minimal_sizes'][name]

    def test_all_labels_realised_by_six_points(self):
        report = realize_labels(6)
        assert report['missing'] == []
        assert set(report['labels']) == set(LABELS)
        assert report['minimal_sizes']['1'] == 6
        for name, witness in report['labels'].items():
            p = poset_from_json(witness['poset'])
            assert p.size == witness['points']
            assert classify(p, tuple(witness['c']), tuple(witness['i'])).name == name

    def test_five_points_miss_only_label_one(self):
        assert realize_labels(5)['missing'] == ['1']

    def test_parallel_search_matches_serial(self):
        assert realize_labels(3, jobs=2) == realize_labels(3)
