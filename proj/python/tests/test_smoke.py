"""Smoke tests for the python bindings."""

import math

import pytest

import quartet_tree as qt


def test_count_trees():
    assert qt.count_trees(4) == 3
    assert qt.count_trees(5) == 15
    assert qt.count_trees(8) == 10395


def test_reconstructs_random_tree_metric():
    newick, labels, rows = qt.random_tree_metric(10, seed=7)
    assert len(labels) == 10
    table = qt.cost_table(labels, rows)
    found, score = qt.make_tree(table, labels, seed=1)
    assert score == 1.0
    assert found == newick  # canonical emission


def test_exact_matches_search_on_gap_instance():
    table = qt.no_perfect_tree_table(0.1)
    labels = ["u", "v", "w", "x", "y"]
    newick, score, optima = qt.exact_tree(table, labels)
    assert optima == 1
    assert score == pytest.approx(4 / 4.9, abs=1e-12)
    found, found_score = qt.make_tree(table, labels, seed=3, runs=6)
    assert found == newick
    assert found_score == pytest.approx(score, abs=1e-12)


def test_degenerate_table_raises():
    labels = ["a", "b", "c", "d"]
    rows = [[0.5 * (i != j) for j in range(4)] for i in range(4)]
    table = qt.cost_table(labels, rows)
    assert table.degenerate
    with pytest.raises(qt.DegenerateTableError):
        qt.make_tree(table, labels)


def test_ncd_basics():
    import hashlib

    def pseudo_random(seed: bytes, size: int) -> bytes:
        out = bytearray()
        block = seed
        while len(out) < size:
            block = hashlib.sha256(block).digest()
            out.extend(block)
        return bytes(out[:size])

    x = pseudo_random(b"x", 16384)
    y = pseudo_random(b"y", 16384)
    self_d = qt.ncd(x, x, compressor="deflate")
    cross = qt.ncd(x, y, compressor="deflate")
    assert 0 <= self_d < 0.05
    assert cross > 0.9


def test_ncd_matrix_and_clustering():
    items = qt.tag_corpus(seed=5, ci_scale=True)[:8]
    labels, rows = qt.ncd_matrix(items, compressor="bwt")
    assert labels == [name for name, _ in items]
    n = len(labels)
    for i in range(n):
        for j in range(n):
            assert rows[i][j] == rows[j][i]
            if i != j:
                assert 0 <= rows[i][j] <= 1.2


def test_sampler():
    draws = qt.sample_k(k_max=32, seed=9, draws=5000)
    assert min(draws) >= 1
    assert max(draws) <= 32
    assert draws.count(1) > len(draws) / 10
