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
"""Runs one of the solvers on a graph and wraps the outcome in a report"""

import logging

from typing import Optional

from kl_sparsity import constants
from kl_sparsity import oracle
from kl_sparsity import pebble_component
from kl_sparsity import pebble_naive
from kl_sparsity import trackers
from kl_sparsity.datatypes.graph import SparsityParams, WeightedMultigraph
from kl_sparsity.datatypes.report import SolveCounters, SolveReport
from kl_sparsity.exceptions import ParameterError

logger = logging.getLogger(name=__name__)


def solve(graph: WeightedMultigraph,
          params: SparsityParams,
          algorithm: str = constants.ALGORITHM_COMPONENT,
          tracker: str = constants.TRACKER_AUTO,
          unweighted: bool = False,
          counters: Optional[SolveCounters] = None) -> SolveReport:
    """Maximum-weight (k, ell)-sparse subgraph of `graph`.

    With `unweighted` every edge weighs 1 and the result is a maximum-size
    sparse subgraph. The tracker name only matters for the component
    algorithm.
    """
    if counters is None:
        counters = SolveCounters()
    if unweighted:
        graph = graph.with_unit_weights()

    if algorithm == constants.ALGORITHM_NAIVE:
        accepted, orientation = pebble_naive.solve_naive(graph,
                                                         params,
                                                         counters=counters)
        report = SolveReport.from_accepted(graph,
                                           accepted,
                                           counters=counters,
                                           algorithm=algorithm)
        report.orientation = orientation
        return report
    if algorithm == constants.ALGORITHM_COMPONENT:
        component_tracker = trackers.create_tracker(tracker, graph.n, params,
                                                    counters, unweighted)
        return pebble_component.solve_component(graph,
                                                params,
                                                component_tracker,
                                                counters=counters)
    if algorithm == constants.ALGORITHM_ORACLE:
        accepted = oracle.solve_greedy_oracle(graph, params)
        return SolveReport.from_accepted(graph,
                                         accepted,
                                         counters=counters,
                                         algorithm=algorithm)
    raise ParameterError(f"unknown algorithm {algorithm!r}")
