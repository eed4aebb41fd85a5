# Copyright 2026 kl-sparsity Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Test oracle.py"""

import itertools
import os
import sys
import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.realpath(__file__)) + "/../")

from kl_sparsity import checks  # noqa: E402
from kl_sparsity import generators  # noqa: E402
from kl_sparsity import oracle  # noqa: E402
from kl_sparsity.datatypes.graph import (  # noqa: E402
    SparsityParams, WeightedMultigraph)
from kl_sparsity.exceptions import GraphError, OracleLimitError  # noqa: E402


def complete_graph(n):
    return WeightedMultigraph(n, itertools.combinations(range(n), 2))


def mask_members(mask):
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def brute_force_max_size(graph, params):
    """Largest sparse edge subset, by trying all subsets"""
    for size in range(graph.m, -1, -1):
        for subset in itertools.combinations(range(graph.m), size):
            if oracle.is_sparse(graph.edge_subgraph(subset), params):
                return size
    return 0


def test_induced_edge_counts_triangle():
    graph = WeightedMultigraph(3, [(0, 1), (1, 2), (0, 2), (0, 1)])
    counts = oracle.induced_edge_counts(graph)
    # masks: 0b011 = {0, 1}, 0b111 = {0, 1, 2}, 0b101 = {0, 2}
    assert counts[0b011] == 2
    assert counts[0b101] == 1
    assert counts[0b111] == 4
    assert counts[0b001] == 0
    assert list(oracle.subset_sizes(3)) == [0, 1, 1, 2, 1, 2, 2, 3]


def test_subset_bounds():
    bounds = oracle.subset_bounds(3, SparsityParams(2, 3))
    assert list(bounds) == [0, 0, 0, 1, 0, 1, 1, 3]


def test_is_sparse(laman):
    k4 = complete_graph(4)
    assert not oracle.is_sparse(k4, laman)
    assert oracle.is_sparse(k4.edge_subgraph(range(5)), laman)
    assert oracle.is_sparse(WeightedMultigraph(6, []), laman)


def test_is_tight_and_spanning(laman):
    triangle = complete_graph(3)
    assert oracle.is_tight(triangle, laman)
    k4 = complete_graph(4)
    assert not oracle.is_tight(k4, laman)
    assert oracle.is_spanning(k4, laman)
    assert not oracle.is_spanning(WeightedMultigraph(4, [(0, 1)]), laman)


def test_chord_example_is_tight(chord_example_graph, laman):
    assert oracle.is_tight(chord_example_graph, laman)
    assert not oracle.is_tight(chord_example_graph.edge_subgraph(range(12)), laman)


def test_k4_max_size_matches_exhaustive_search(laman):
    k4 = complete_graph(4)
    assert brute_force_max_size(k4, laman) == 5
    assert len(oracle.solve_greedy_oracle(k4, laman)) == 5


def test_enumerate_components_merge_example(merge_example_graph, laman):
    before = merge_example_graph.edge_subgraph(range(10))
    blocks = oracle.enumerate_components(before, laman)
    assert blocks.blocks == [[0, 1, 2], [1, 3, 4], [1, 5], [3, 6, 7]]
    after = oracle.enumerate_components(merge_example_graph, laman)
    assert after.blocks == [[0, 1, 2, 3, 4], [1, 5], [3, 6, 7]]
    assert (0, 4) in after.pair_relation()
    assert (0, 5) not in after.pair_relation()


def test_enumerate_components_path():
    path = WeightedMultigraph(3, [(0, 1), (1, 2)])
    blocks = oracle.enumerate_components(path, SparsityParams(1, 1))
    assert blocks.blocks == [[0, 1, 2]]


@pytest.mark.parametrize(("k", "ell", "expected"), [(2, 2, [[0]]),
                                                    (2, 3, [[0]]),
                                                    (2, 1, [])])
def test_enumerate_components_single_vertex(k, ell, expected):
    blocks = oracle.enumerate_components(WeightedMultigraph(1, []),
                                         SparsityParams(k, ell))
    assert blocks.blocks == expected


def test_enumerate_components_rejects_dense_graph(laman):
    with pytest.raises(GraphError):
        oracle.enumerate_components(complete_graph(4), laman)


def test_oracle_guards(laman):
    with pytest.raises(OracleLimitError):
        oracle.is_sparse(WeightedMultigraph(21, []), laman)
    with pytest.raises(OracleLimitError):
        oracle.enumerate_components(WeightedMultigraph(17, []), laman)
    with pytest.raises(OracleLimitError):
        oracle.solve_greedy_oracle(WeightedMultigraph(21, []), laman)


def test_greedy_oracle_weighted_triangle():
    graph = WeightedMultigraph(3, [(0, 1, 5), (1, 2, 3), (0, 2, 1)])
    assert oracle.solve_greedy_oracle(graph, SparsityParams(1, 1)) == [0, 1]


def test_greedy_oracle_pseudoforest():
    # Two triangles sharing vertex 2: (1, 0) keeps one cycle per component
    graph = WeightedMultigraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4),
                                   (2, 4)])
    assert len(oracle.solve_greedy_oracle(graph, SparsityParams(1, 0))) == 5


def test_overlapping_blocks_union_and_intersection(laman):
    """Blocks sharing two vertices have block union and intersection"""
    rng = np.random.default_rng(7)
    checked = 0
    for _ in range(40):
        edges = [tuple(rng.choice(6, size=2, replace=False))
                 for _ in range(9)]
        graph = WeightedMultigraph(6, edges)
        sparse = graph.edge_subgraph(oracle.solve_greedy_oracle(graph, laman))
        counts = oracle.induced_edge_counts(sparse)
        bounds = oracle.subset_bounds(6, laman)
        blocks = [mask for mask in range(1, 64) if counts[mask] == bounds[mask]]
        for first, second in itertools.combinations(blocks, 2):
            if bin(first & second).count("1") >= 2:
                assert oracle.is_block(sparse, laman,
                                       mask_members(first | second))
                assert oracle.is_block(sparse, laman,
                                       mask_members(first & second))
                checked += 1
    assert checked > 0


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("k,ell", [(1, 0), (1, 1), (2, 1), (2, 3)])
def test_solver_checks_agree_with_oracle(seed, k, ell):
    params = SparsityParams(k, ell)
    graph = generators.random_multigraph(6, 3 + seed, seed)
    for name in ("sparse", "tight", "spanning"):
        assert (checks.run_check(name, graph, params) ==
                checks.run_check(name, graph, params, brute_force=True))


def test_is_block(laman):
    graph = complete_graph(4).edge_subgraph(range(5))
    assert oracle.is_block(graph, laman, [0, 1, 2, 3])
    assert oracle.is_block(graph, laman, [0, 1])
    assert oracle.is_block(graph, laman, [2])
    assert not oracle.is_block(graph, laman, [])
    assert not oracle.is_block(graph, laman, [2, 3])
    assert not oracle.is_block(graph, SparsityParams(1, 0), [2])
