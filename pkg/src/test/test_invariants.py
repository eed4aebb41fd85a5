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
"""Checks run after every accepted edge of the component solver"""

import itertools
import os
import sys
import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.realpath(__file__)) + "/../")

from kl_sparsity import oracle  # noqa: E402
from kl_sparsity import pebble_component  # noqa: E402
from kl_sparsity import trackers  # noqa: E402
from kl_sparsity.datatypes.graph import (  # noqa: E402
    SparsityParams, WeightedMultigraph)
from kl_sparsity.trackers.general import GeneralTracker  # noqa: E402

ALL_PARAMS = [(k, ell) for k in range(1, 4) for ell in range(2 * k)]


def component_pairs(components):
    pairs = set()
    for component in components:
        for u, v in itertools.combinations(sorted(component), 2):
            pairs.add((u, v))
    return pairs


class InvariantChecker:
    """on_accept hook comparing the solver state with the oracle"""

    def __init__(self, graph, params):
        self.graph = graph
        self.params = params
        self.accepted = []

    def __call__(self, edge_index, orientation, tracker):
        params = self.params
        self.accepted.append(edge_index)
        assert orientation.max_indegree() <= params.k
        assert orientation.shadow_edge_indices() == sorted(self.accepted)

        components = tracker.components()
        for first, second in itertools.combinations(components, 2):
            shared = len(set(first) & set(second))
            assert shared <= 1
            if params.disjoint_components:
                assert shared == 0
        total_size = sum(len(component) for component in components)
        assert params.k * total_size <= (len(self.accepted) +
                                         2 * params.k * len(components))

        blocks = oracle.enumerate_components(
            self.graph.edge_subgraph(self.accepted), params)
        assert component_pairs(components) == blocks.pair_relation()
        if isinstance(tracker, GeneralTracker):
            assert tracker.matrix.is_symmetric()
            assert tracker.matrix.pairs() == blocks.pair_relation()


def check_absorb_records(tracker, params):
    for record in tracker.records:
        t = record.deleted
        assert record.redundant_writes <= (tracker.n +
                                           record.overlap_square_sum)
        if t == 0:
            assert record.overlap_sum == 0
            continue
        assert params.k * record.overlap_sum <= params.ell * (t - 1)
        assert record.overlap_sum < 2 * t


def random_multigraph(rng, unit):
    n = int(rng.integers(2, 9))
    m = int(rng.integers(1, 25))
    edges = []
    for _ in range(m):
        u, v = rng.choice(n, size=2, replace=False)
        weight = 1.0 if unit else float(rng.integers(0, 4))
        edges.append((int(u), int(v), weight))
    return WeightedMultigraph(n, edges)


@pytest.mark.parametrize(("k", "ell"), ALL_PARAMS)
def test_invariants_after_every_edge(k, ell):
    params = SparsityParams(k, ell)
    rng = np.random.default_rng(100 * k + ell)
    for run in range(15):
        graph = random_multigraph(rng, unit=run % 3 == 0)
        for name in trackers.applicable_trackers(params):
            tracker = trackers.create_tracker(name, graph.n, params)
            if tracker.requires_grouped_order and \
                    not graph.has_uniform_weights():
                continue
            checker = InvariantChecker(graph, params)
            report = pebble_component.solve_component(graph,
                                                      params,
                                                      tracker,
                                                      on_accept=checker)
            assert checker.accepted == report.accepted
            assert report.counters.max_searches_per_edge <= ell + 1
            if isinstance(tracker, GeneralTracker):
                check_absorb_records(tracker, params)


def test_chord_example_overlap_bounds(chord_example_graph, laman):
    tracker = GeneralTracker(chord_example_graph.n, laman)
    pebble_component.solve_component(chord_example_graph, laman, tracker)
    check_absorb_records(tracker, laman)
    last = tracker.records[-1]
    assert last.deleted == 4
    assert last.redundant_writes <= 8 + last.overlap_square_sum


def test_overlap_bounds_on_larger_graphs():
    for seed, (k, ell) in enumerate([(2, 3), (3, 5), (2, 2), (3, 4)]):
        rng = np.random.default_rng(seed)
        n = 60
        edges = []
        for _ in range(8 * n):
            u, v = rng.choice(n, size=2, replace=False)
            edges.append((int(u), int(v), float(rng.integers(1, 10))))
        graph = WeightedMultigraph(n, edges)
        params = SparsityParams(k, ell)
        tracker = GeneralTracker(n, params)
        report = pebble_component.solve_component(graph, params, tracker)
        check_absorb_records(tracker, params)
        assert len(report.accepted) <= params.edge_bound(n)
        assert sum(r.redundant_writes for r in tracker.records) == \
            report.counters.redundant_writes
