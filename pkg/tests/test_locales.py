"""
Tests for finite frames, nuclei and the operators on the sublocale co-frame.
"""

import pytest

from kuratowski_lab.errors import NotALattice, NotDistributive
from kuratowski_lab.locales import (
    LOCALIC_BOUND,
    Nucleus,
    check_frame,
    check_localic_laws,
    closed_sublocale,
    enumerate_frames,
    is_nucleus,
    localic_monoid,
    localic_operators,
    nuclei,
    open_sublocale,
    sublocale_lattice,
)
from kuratowski_lab.posets import chain, is_closure


class TestCheckFrame:
    def test_not_a_lattice(self, vee):
        with pytest.raises(NotALattice):
            check_frame(vee)

    def test_not_distributive(self, m3):
        with pytest.raises(NotDistributive):
            check_frame(m3)

    def test_chain3_tables(self, chain3):
        f = check_frame(chain3)
        assert (f.bottom, f.top) == (0, 2)
        assert f.meet[1][2] == 1
        assert f.join[0][1] == 1
        assert f.imp[2][1] == 1
        assert f.imp[1][2] == 2
        assert f.pseudocomplement() == (2, 0, 0)

    def test_boolean_pseudocomplement(self, boolean4):
        f = check_frame(boolean4)
        assert f.pseudocomplement() == (3, 2, 1, 0)
        assert f.join_all(iter([1, 2])) == 3
        assert f.join_all(iter([])) == 0

    def test_heyting_adjunction(self, boolean4):
        f = check_frame(boolean4)
        p = f.poset
        for a in range(f.size):
            for b in range(f.size):
                for c in range(f.size):
                    assert p.leq(f.meet[c][a], b) == p.leq(c, f.imp[a][b])


class TestNuclei:
    @pytest.mark.parametrize('size,count', [(1, 1), (2, 2), (3, 4)])
    def test_chain_counts(self, size, count):
        assert len(nuclei(check_frame(chain(size)))) == count

    def test_boolean4(self, boolean4):
        f = check_frame(boolean4)
        found = nuclei(f)
        assert len(found) == 4
        for j in found:
            assert is_nucleus(f, j.map)
            assert is_closure(j.map, f.poset)

    def test_open_and_closed(self, chain3):
        f = check_frame(chain3)
        whole = Nucleus((0, 1, 2))
        assert open_sublocale(f, f.top) == whole
        assert closed_sublocale(f, f.bottom) == whole
        assert closed_sublocale(f, f.top) == Nucleus((2, 2, 2))
        assert closed_sublocale(f, 1).fixpoints() == (1, 2)
        for a in range(f.size):
            assert is_nucleus(f, open_sublocale(f, a).map)
            assert is_nucleus(f, closed_sublocale(f, a).map)

    def test_not_a_nucleus(self, chain3):
        f = check_frame(chain3)
        assert not is_nucleus(f, (0, 0, 2))
        assert not is_nucleus(f, (1, 2, 2))


class TestSublocales:
    def test_whole_is_top(self, chain3):
        lat = sublocale_lattice(check_frame(chain3))
        whole = lat.index[Nucleus((0, 1, 2))]
        void = lat.index[Nucleus((2, 2, 2))]
        assert lat.poset.top == whole
        assert lat.poset.bottom == void

    def test_chain2_operators(self, chain2):
        c, i, neg = localic_operators(check_frame(chain2))
        assert c == i == (0, 1)
        assert neg == (1, 0)
        assert len(localic_monoid(check_frame(chain2))) == 2

    def test_operators_are_closure_and_interior(self, chain3):
        lat = sublocale_lattice(check_frame(chain3))
        c, i, _ = localic_operators(lat.frame)
        assert is_closure(c, lat.poset)
        for s in range(lat.poset.size):
            assert lat.poset.leq(i[s], s)
            assert i[i[s]] == i[s]


class TestEnumerateFrames:
    def test_counts(self):
        sizes = [f.size for f in enumerate_frames(8)]
        counts = [sizes.count(n) for n in range(1, 9)]
        assert counts == [1, 1, 1, 2, 3, 5, 8, 15]
        assert sizes == sorted(sizes)

    def test_small_bound(self):
        assert [f.size for f in enumerate_frames(3)] == [1, 2, 3]


class TestLocalicLaws:
    @pytest.mark.parametrize('frame', enumerate_frames(5), ids=lambda f: f'size{f.size}')
    def test_small_frames(self, frame):
        report = check_localic_laws(frame)
        failed = [name for name, ok in report['checks'].items() if not ok]
        assert report['verified'], failed
        assert report['monoid_size'] <= LOCALIC_BOUND
        assert report['failed_edges'] == []

    @pytest.mark.slow
    def test_frames_up_to_eight(self):
        for frame in enumerate_frames(8):
            assert check_localic_laws(frame)['verified'], frame.size
