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
"""Augmenting-path pebble game in O(nm) time.

Kept as the correctness baseline for the component-based solver: for
every edge it searches for augmenting paths until the endpoints have
enough spare indegree or no path is left.
"""

import logging

from typing import (
    Callable,
    List,
    Optional,
    Tuple,
)

from kl_sparsity.datatypes.graph import (SparsityParams, WeightedMultigraph,
                                         processing_order)
from kl_sparsity.datatypes.orientation import Orientation
from kl_sparsity.datatypes.report import SolveCounters

logger = logging.getLogger(name=__name__)

AcceptHook = Callable[[int, Orientation, object], None]


def try_accept(orientation: Orientation,
               u: int,
               v: int,
               params: SparsityParams,
               counters: Optional[SolveCounters] = None) -> bool:
    """Decides whether uv can join the oriented edge set.

    Reverses augmenting paths while indegree(u) + indegree(v) >= 2k - ell.
    Reversals done before a failed search stay in place; they leave a valid
    orientation of the same edges.
    """
    slack = params.slack
    indeg = orientation.indeg
    searches = 0
    while indeg[u] + indeg[v] >= slack:
        path = orientation.find_path_from_deficient(u, v, counters)
        searches += 1
        if path is None:
            break
        orientation.reverse_path(path, counters)
    assert searches <= params.ell + 1, (
        f"{searches} path searches for a single edge")
    if counters is not None:
        counters.max_searches_per_edge = max(counters.max_searches_per_edge,
                                             searches)
    return indeg[u] + indeg[v] < slack


def solve_naive(
        graph: WeightedMultigraph,
        params: SparsityParams,
        order: Optional[List[int]] = None,
        counters: Optional[SolveCounters] = None,
        on_accept: Optional[AcceptHook] = None
) -> Tuple[List[int], Orientation]:
    """Maximum-weight (k, ell)-sparse subgraph by the naive pebble game.

    :param order: edge processing order; defaults to non-increasing weight
        with negative edges dropped.
    :param on_accept: called as on_accept(edge_index, orientation, None)
        after every accepted edge.

    :returns: the accepted edge indices in processing order and the final
        orientation.
    """
    if order is None:
        order = processing_order(graph)
    orientation = Orientation(graph.n, params.k)
    accepted: List[int] = []
    for edge_index in order:
        u, v = graph.endpoints(edge_index)
        if try_accept(orientation, u, v, params, counters):
            accepted.append(edge_index)
            orientation.insert_arc(u, v, edge_index)
            if on_accept is not None:
                on_accept(edge_index, orientation, None)

    logger.info("Naive pebble game: n=%d m=%d k=%d ell=%d accepted=%d",
                graph.n, graph.m, params.k, params.ell, len(accepted))
    return accepted, orientation
