"""
Tests for operator monoids: generation, witnesses, order and rendering.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuratowski_lab.errors import EmptyWord, InputError, NotAPartialOrder, SizeMismatch, UnknownLetter
from kuratowski_lab.monoid import (
    element_partition,
    evaluate,
    generate_monoid,
    hasse_edges,
    parse_word,
    to_dot,
    to_json,
    word_name,
)
from kuratowski_lab.posets import chain, compose, constant, identity, is_monotone

KURATOWSKI_CHAIN2 = {'c': (1, 1), 'i': (0, 0)}


class TestWords:
    def test_identity_spelling(self):
        assert parse_word('id') == ''
        assert word_name('') == 'id'
        assert parse_word('ci') == 'ci'

    def test_rightmost_letter_acts_first(self):
        gens = {'a': (1, 1, 2), 'b': (0, 0, 1)}
        assert evaluate('ab', gens, 3) == compose(gens['a'], gens['b'])
        assert evaluate('ab', gens, 3) == (1, 1, 1)
        assert evaluate('ba', gens, 3) == (0, 0, 1)

    def test_empty_word_is_identity(self):
        assert evaluate('', {}, 3) == identity(3)

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter) as exc:
            evaluate('cx', {'c': (0,)}, 1)
        assert exc.value.details['letter'] == 'x'


class TestGeneration:
    def test_closure_interior_on_chain(self, chain2):
        m = generate_monoid(chain2, KURATOWSKI_CHAIN2)
        assert len(m) == 3, 'Should collapse ci to c and ic to i'
        assert m.witnesses == ('', 'c', 'i')
        assert m.map_of('ci') == (1, 1)
        assert m.map_of('id') == identity(2)

    def test_without_identity(self, chain2):
        m = generate_monoid(chain2, KURATOWSKI_CHAIN2, include_identity=False)
        assert len(m) == 2
        with pytest.raises(EmptyWord):
            m.map_of('id')

    def test_identity_generator_keeps_single_element(self, chain2):
        m = generate_monoid(chain2, {'e': identity(2)})
        assert m.witnesses == ('',)
        m = generate_monoid(chain2, {'e': identity(2)}, include_identity=False)
        assert m.witnesses == ('e',)

    def test_shift_generates_cyclic_group(self):
        m = generate_monoid(chain(4), {'s': (1, 2, 3, 0)}, include_identity=False)
        assert len(m) == 4
        assert m.witnesses == ('s', 'ss', 'sss', 'ssss')

    def test_witnesses_are_shortest_and_length_lex(self, chain3):
        gens = {'a': (1, 1, 2), 'b': (0, 0, 1)}
        m = generate_monoid(chain3, gens)
        for f, word in zip(m.elements, m.witnesses):
            assert evaluate(word, gens, 3) == f
        lengths = [len(w) for w in m.witnesses]
        assert lengths == sorted(lengths)

    def test_table_and_order(self, chain2):
        m = generate_monoid(chain2, KURATOWSKI_CHAIN2)
        ident, c, i = (m.element_of(w) for w in ('id', 'c', 'i'))
        assert m.table[c][i] == c
        assert m.table[i][c] == i
        assert m.order[i][ident] and m.order[ident][c]
        assert not m.order[c][i]
        assert sorted(m.edges()) == sorted([(i, ident), (ident, c)])

    def test_rejects_bad_generators(self, chain2):
        with pytest.raises(SizeMismatch):
            generate_monoid(chain2, {'c': (1, 1, 1)})
        with pytest.raises(InputError):
            generate_monoid(chain2, {'cc': (1, 1)})

    def test_partition_groups_equal_maps(self, chain2):
        m = generate_monoid(chain2, KURATOWSKI_CHAIN2)
        blocks = element_partition(m, ['c', 'ci', 'i', 'ic', 'cic'])
        assert blocks == [('c', 'ci', 'cic'), ('i', 'ic')]

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=2), min_size=3, max_size=3))
    def test_monotone_generators_stay_monotone(self, image):
        p = chain(3)
        f = tuple(sorted(image))
        m = generate_monoid(p, {'f': f, 'k': constant(3, 2)})
        assert all(is_monotone(g, p) for g in m.elements)
        assert len(set(m.elements)) == len(m)


class TestOrderAndRendering:
    def test_hasse_edges_of_chain(self):
        order = [[True, True, True], [False, True, True], [False, False, True]]
        assert hasse_edges(order) == [(0, 1), (1, 2)]

    def test_preorder_rejected(self):
        with pytest.raises(NotAPartialOrder):
            hasse_edges([[True, True], [True, True]])

    def test_json_and_dot(self, chain2):
        m = generate_monoid(chain2, KURATOWSKI_CHAIN2)
        data = to_json(m)
        assert data['alphabet'] == ['c', 'i']
        assert [e['witness'] for e in data['elements']] == ['id', 'c', 'i']
        dot = to_dot(m, name='kuratowski')
        assert dot.startswith('digraph "kuratowski" {')
        assert '"i" -> "" [dir=none, style=solid];' in dot
