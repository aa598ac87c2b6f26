"""
Tests for golden-data loading and the worker fan-out.
"""

import json

import pytest

from kuratowski_lab.catalogs import (
    DIAGRAM_CATALOGS,
    data_dir,
    expected_collapse_count,
    expected_irreducibles,
    fig7_nodes,
    load_catalog,
    load_fig5,
    set_data_dir,
)
from kuratowski_lab.chittenden import Params, wset
from kuratowski_lab.context import log_context
from kuratowski_lab.errors import ConfigError
from kuratowski_lab.parallel import run_tasks


class TestGoldenData:
    def test_expected_counts(self):
        assert expected_collapse_count(3, 3) == 52
        assert expected_collapse_count(2, 2) == 16
        assert expected_collapse_count(4, 4) is None
        assert len(fig7_nodes()) == 52

    def test_diagram_catalogs(self):
        for name in DIAGRAM_CATALOGS:
            d = load_catalog(name)
            assert d.name == name
            assert len(set(d.nodes)) == len(d.nodes)
        assert len(load_catalog('fig2').nodes) == 31

    def test_unknown_catalog(self):
        with pytest.raises(ConfigError):
            load_catalog('fig9')

    def test_irreducibles_recorded_for_fig2(self):
        join, meet = expected_irreducibles('fig2')
        assert 'i--i' in join
        assert 'bib' in meet

    def test_fig5_panels_use_their_words(self):
        for (m, n), edges in load_fig5().items():
            words = set(wset(Params(m, n)))
            for lo, hi in edges:
                assert lo in words and hi in words, f'C({m},{n}): {lo} < {hi}'

    def test_redirect(self, tmp_path):
        (tmp_path / 'fig7.json').write_text(json.dumps({'expected_counts': {'3,3': 7}, 'nodes': []}))
        set_data_dir(str(tmp_path))
        assert data_dir() == str(tmp_path)
        assert expected_collapse_count(3, 3) == 7
        set_data_dir(None)
        assert expected_collapse_count(3, 3) == 52

    def test_missing_file(self, tmp_path):
        set_data_dir(str(tmp_path))
        with pytest.raises(ConfigError):
            load_catalog('fig2')

    def test_malformed_file(self, tmp_path):
        (tmp_path / 'fig7.json').write_text('[')
        set_data_dir(str(tmp_path))
        with pytest.raises(ConfigError):
            fig7_nodes()


class TestRunTasks:
    def test_serial_keeps_order(self):
        assert run_tasks(abs, [-3, 1, -2]) == [3, 1, 2]

    def test_pool_keeps_order(self):
        tasks = list(range(-10, 10))
        with log_context(search='test'):
            assert run_tasks(abs, tasks, jobs=2, chunksize=3) == [abs(x) for x in tasks]
