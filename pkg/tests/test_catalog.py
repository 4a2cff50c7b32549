import pytest

from matroid_hopf import (
    Catalog,
    CatalogTooLarge,
    canonical_key,
    cached_catalog,
    enumerate_matroids,
    load_cache,
    save_cache,
    uniform,
    validate,
)
from matroid_hopf.catalog import CACHE_ENV_VAR, cache_path, default_cache_dir

from oracles import unpruned_counts

# frozen from the pre-build unpruned oracle run
GOLDEN_CLASSES = {0: 1, 1: 2, 2: 4, 3: 8, 4: 17}
GOLDEN_LABELED = {0: 1, 1: 2, 2: 5, 3: 16, 4: 68}


def test_counts_match_frozen_goldens(catalogs):
    for n in range(5):
        assert len(catalogs[n]) == GOLDEN_CLASSES[n]
        assert catalogs[n].labeled_count == GOLDEN_LABELED[n]


def test_counts_match_live_oracle(catalogs):
    for n in range(4):
        labeled, classes = unpruned_counts(n)
        assert (labeled, classes) == (catalogs[n].labeled_count, len(catalogs[n]))


def test_classes_sorted_and_unique(catalogs):
    for n in range(5):
        keys = catalogs[n].classes
        assert list(keys) == sorted(keys, key=lambda k: k.sort_key())
        assert len(set(keys)) == len(keys)


def test_representatives_validate(catalogs):
    for n in range(5):
        for m in catalogs[n].representatives():
            assert validate(m.n, m.independents) == m


def test_uniform_matroids_appear_once(catalogs):
    for n in range(5):
        keys = set(catalogs[n].classes)
        for r in range(n + 1):
            assert canonical_key(uniform(r, n)) in keys


def test_closed_under_minors_and_duals(catalogs, catalog_reps):
    universe = {k for n in range(5) for k in catalogs[n].classes}
    for m in catalog_reps:
        for t in range(1 << m.n):
            assert canonical_key(m.restrict(t)) in universe
            assert canonical_key(m.delete(t)) in universe
            assert canonical_key(m.contract(t)) in universe
        assert canonical_key(m.dual()) in universe


def test_too_large():
    with pytest.raises(CatalogTooLarge):
        enumerate_matroids(5)


class TestCache:
    def test_round_trip(self, tmp_path, catalogs):
        for n in range(4):
            save_cache(catalogs[n], tmp_path)
            loaded = load_cache(n, tmp_path)
            assert loaded == catalogs[n]

    def test_missing_returns_none(self, tmp_path):
        assert load_cache(2, tmp_path) is None

    def test_version_stamp_checked(self, tmp_path, catalogs):
        path = save_cache(catalogs[2], tmp_path)
        body = path.read_text().replace('"version": 1', '"version": 0')
        path.write_text(body)
        assert load_cache(2, tmp_path) is None

    def test_corrupt_file_ignored(self, tmp_path):
        cache_path(1, tmp_path).parent.mkdir(parents=True, exist_ok=True)
        cache_path(1, tmp_path).write_text("not json\n")
        assert load_cache(1, tmp_path) is None

    def test_cached_catalog_falls_back_to_enumeration(self, tmp_path, catalogs):
        assert cached_catalog(3, tmp_path) == catalogs[3]

    def test_env_var_overrides_default_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path / "elsewhere"))
        assert default_cache_dir() == tmp_path / "elsewhere"
