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
"""Sparse, tight and spanning checks backed by the component solver.

Unlike the brute-force oracle these work for graphs of any size. A graph
is (k, ell)-sparse iff the solver accepts every edge, and contains a
spanning tight subgraph iff the solver accepts max(kn - ell, 0) edges.
"""

import logging

from kl_sparsity import constants
from kl_sparsity import oracle
from kl_sparsity import pebble_component
from kl_sparsity import trackers
from kl_sparsity.datatypes.graph import SparsityParams, WeightedMultigraph
from kl_sparsity.exceptions import ParameterError

logger = logging.getLogger(name=__name__)


def _accepted_count(graph: WeightedMultigraph,
                    params: SparsityParams) -> int:
    unit = graph.with_unit_weights()
    tracker = trackers.create_tracker(constants.TRACKER_AUTO, unit.n, params)
    report = pebble_component.solve_component(unit, params, tracker)
    return len(report.accepted)


def check_sparse(graph: WeightedMultigraph, params: SparsityParams) -> bool:
    return _accepted_count(graph, params) == graph.m


def check_tight(graph: WeightedMultigraph, params: SparsityParams) -> bool:
    if graph.m != params.edge_bound(graph.n):
        return False
    return check_sparse(graph, params)


def check_spanning(graph: WeightedMultigraph,
                   params: SparsityParams) -> bool:
    return _accepted_count(graph, params) == params.edge_bound(graph.n)


def run_check(check: str,
              graph: WeightedMultigraph,
              params: SparsityParams,
              brute_force: bool = False) -> bool:
    """Dispatches a named check, to the oracle when `brute_force` is set."""
    if brute_force:
        checkers = {
            constants.CHECK_SPARSE: oracle.is_sparse,
            constants.CHECK_TIGHT: oracle.is_tight,
            constants.CHECK_SPANNING: oracle.is_spanning,
        }
    else:
        checkers = {
            constants.CHECK_SPARSE: check_sparse,
            constants.CHECK_TIGHT: check_tight,
            constants.CHECK_SPANNING: check_spanning,
        }
    if check not in checkers:
        raise ParameterError(f"unknown check {check!r}")
    result = checkers[check](graph, params)
    logger.info("Check %s on n=%d m=%d: %s", check, graph.n, graph.m, result)
    return result
