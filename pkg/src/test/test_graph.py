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
"""Test datatypes/graph.py"""

import os
import sys
import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.realpath(__file__)) + "/../")

from kl_sparsity.datatypes.graph import (  # noqa: E402
    SparsityParams, WeightedMultigraph, processing_order, sort_edges)
from kl_sparsity.exceptions import GraphError, ParameterError  # noqa: E402


@pytest.mark.parametrize(("k", "ell"), [(1, 0), (1, 1), (2, 3), (3, 5),
                                        (2, 0)])
def test_valid_params(k, ell):
    params = SparsityParams(k, ell)
    assert params.slack == 2 * k - ell
    assert params.slack > 0


@pytest.mark.parametrize(("k", "ell"), [(2, 4), (1, 2), (0, 0), (-1, 0),
                                        (2, -1), (True, False), (2, True),
                                        (2.0, 1)])
def test_invalid_params(k, ell):
    with pytest.raises(ParameterError):
        SparsityParams(k, ell)


def test_params_ranges():
    assert SparsityParams(2, 3).singleton_components
    assert not SparsityParams(2, 3).disjoint_components
    assert SparsityParams(2, 2).singleton_components
    assert SparsityParams(2, 2).disjoint_components
    assert not SparsityParams(2, 1).singleton_components
    assert SparsityParams(1, 0).edge_bound(1) == 1
    assert SparsityParams(2, 3).edge_bound(1) == 0
    assert SparsityParams(2, 3).edge_bound(4) == 5
    assert SparsityParams(2, 3) == SparsityParams(2, 3)
    assert SparsityParams(2, 3) != SparsityParams(2, 2)


def test_multigraph_defaults_and_parallel_edges():
    graph = WeightedMultigraph(3, [(0, 1), (0, 1, 2.5), (1, 2, -1)])
    assert graph.m == 3
    assert graph.weight(0) == 1.0
    assert graph.weight(1) == 2.5
    assert graph.endpoints(2) == (1, 2)
    assert graph.total_weight([0, 1]) == 3.5
    assert not graph.has_uniform_weights()
    assert graph.with_unit_weights().has_uniform_weights()


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)],
                                   [(0, 1, 2, 3)], [(0.7, 1.9, 1.0)],
                                   [(0, 1.0)], [(True, 2)],
                                   [(0, 1, float("nan"))],
                                   [(0, 1, float("inf"))], [(0, 1, "heavy")]])
def test_multigraph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        WeightedMultigraph(3, edges)


def test_multigraph_accepts_numpy_scalars():
    graph = WeightedMultigraph(3, [(np.int64(0), np.int64(2), np.float64(2))])
    assert graph.edges == ((0, 2, 2.0),)
    assert type(graph.endpoints(0)[0]) is int


def test_edge_subgraph_keeps_index_order():
    graph = WeightedMultigraph(4, [(0, 1, 1), (1, 2, 2), (2, 3, 3)])
    sub = graph.edge_subgraph([2, 0])
    assert sub.n == 4
    assert sub.edges == ((0, 1, 1.0), (2, 3, 3.0))


def test_sort_edges_is_stable():
    graph = WeightedMultigraph(4, [(0, 1, 1), (1, 2, 3), (2, 3, 1),
                                   (0, 2, 3), (0, 3, 2)])
    assert sort_edges(graph) == [1, 3, 4, 0, 2]


def test_sort_edges_empty():
    assert sort_edges(WeightedMultigraph(5, [])) == []


def test_sort_edges_all_equal():
    graph = WeightedMultigraph(4, [(0, 1), (1, 2), (2, 3)])
    assert sort_edges(graph) == [0, 1, 2]


def test_processing_order_skips_negative_edges():
    graph = WeightedMultigraph(3, [(0, 1, -2), (1, 2, 0), (0, 2, 4)])
    assert processing_order(graph) == [2, 1]
