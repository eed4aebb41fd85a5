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
"""Component-based pebble game in O(n^2 + m) time.

The solver keeps the naive game's orientation but asks a component
tracker whether an edge can be accepted. Only accepted edges pay for path
searches and for the traversal that detects a newly formed component.
"""

import abc
import logging

from typing import (
    Callable,
    List,
    Optional,
)

from kl_sparsity import constants
from kl_sparsity import edge_list
from kl_sparsity.datatypes.graph import (SparsityParams, WeightedMultigraph,
                                         processing_order)
from kl_sparsity.datatypes.orientation import Orientation
from kl_sparsity.datatypes.report import SolveCounters, SolveReport
from kl_sparsity.exceptions import ParameterError

logger = logging.getLogger(name=__name__)


class ComponentTracker(abc.ABC):
    """Answers whether two vertices share a (k, ell)-component.

    After any sequence of `absorb` calls that mirrors the accepted edges,
    `in_common(u, v)` is true iff some current component of the accepted
    subgraph contains both u and v.
    """
    name: str = ""
    # Set by trackers that only work when edges arrive grouped by their
    # first endpoint.
    requires_grouped_order: bool = False

    def __init__(self,
                 n: int = 0,
                 params: Optional[SparsityParams] = None,
                 counters: Optional[SolveCounters] = None) -> None:
        self.counters = counters if counters is not None else SolveCounters()
        if params is None:
            params = SparsityParams(1, 0)
        self.n = n
        self.params = params
        self.reset(n, params)

    @classmethod
    def get_name(cls) -> str:
        """Return name of tracker"""
        return cls.name

    @classmethod
    def supports(cls, params: SparsityParams) -> bool:
        """Whether the tracker is valid for the given parameters"""
        return True

    @abc.abstractmethod
    def reset(self, n: int, params: SparsityParams) -> None:
        """Starts over on n vertices with no accepted edges.

        Singleton components exist from the start iff ell >= k.
        """

    @abc.abstractmethod
    def in_common(self, u: int, v: int) -> bool:
        """Whether a current component contains both u and v"""

    @abc.abstractmethod
    def absorb(self, component: List[int]) -> None:
        """Records a newly formed component, dropping the ones it contains"""

    @abc.abstractmethod
    def components(self) -> List[List[int]]:
        """The current components as vertex lists"""


AcceptHook = Callable[[int, Orientation, ComponentTracker], None]


def find_component(orientation: Orientation,
                   u: int,
                   v: int,
                   params: SparsityParams,
                   counters: Optional[SolveCounters] = None) -> List[int]:
    """The component formed by the arc just inserted for uv, or [].

    Requires indegree(u) + indegree(v) <= 2k - ell. When the sum is below
    2k - ell no block can contain both endpoints. Otherwise the only
    candidate is the set T of vertices unreachable from the deficient
    vertices outside {u, v}, and it is a component iff it holds u and v.
    """
    if orientation.indeg[u] + orientation.indeg[v] < params.slack:
        return []
    unreached = orientation.unreachable_from_deficient(u, v, counters)
    members = set(unreached)
    if u in members and v in members:
        return unreached
    return []


def solve_component(graph: WeightedMultigraph,
                    params: SparsityParams,
                    tracker: ComponentTracker,
                    order: Optional[List[int]] = None,
                    counters: Optional[SolveCounters] = None,
                    on_accept: Optional[AcceptHook] = None) -> SolveReport:
    """Maximum-weight (k, ell)-sparse subgraph by the component pebble game.

    :param tracker: component tracker; it is reset for this graph.
    :param order: edge processing order. Defaults to non-increasing weight,
        or to the vertex-grouped order for trackers that need it.
    :param on_accept: called as on_accept(edge_index, orientation, tracker)
        after every accepted edge, once the tracker is up to date.
    """
    if not tracker.supports(params):
        raise ParameterError(
            f"tracker {tracker.get_name()} does not support "
            f"k={params.k}, ell={params.ell}")
    if counters is None:
        counters = SolveCounters()

    if order is None:
        if tracker.requires_grouped_order:
            if not graph.has_uniform_weights():
                raise ParameterError(
                    f"tracker {tracker.get_name()} needs uniform weights")
            order = [
                idx for idx in edge_list.grouped_edge_order(graph)
                if graph.weight(idx) >= 0
            ]
        else:
            order = processing_order(graph)

    tracker.reset(graph.n, params)
    tracker.counters = counters
    orientation = Orientation(graph.n, params.k)
    indeg = orientation.indeg
    slack = params.slack

    accepted: List[int] = []
    for edge_index in order:
        u, v = graph.endpoints(edge_index)
        if tracker.in_common(u, v):
            continue

        searches = 0
        while indeg[u] + indeg[v] >= slack:
            path = orientation.find_path_from_deficient(u, v, counters)
            searches += 1
            assert path is not None, (
                f"no augmenting path for edge {edge_index} ({u}, {v})")
            orientation.reverse_path(path, counters)
        assert searches <= params.ell + 1
        counters.max_searches_per_edge = max(counters.max_searches_per_edge,
                                             searches)

        accepted.append(edge_index)
        orientation.insert_arc(u, v, edge_index)

        component = find_component(orientation, u, v, params, counters)
        if component:
            logger.debug("Edge %d (%d, %d) formed a component of size %d",
                         edge_index, u, v, len(component))
            counters.components_formed += 1
            tracker.absorb(component)
        if on_accept is not None:
            on_accept(edge_index, orientation, tracker)

    logger.info(
        "Component pebble game: n=%d m=%d k=%d ell=%d tracker=%s "
        "accepted=%d", graph.n, graph.m, params.k, params.ell,
        tracker.get_name(), len(accepted))

    report = SolveReport.from_accepted(graph,
                                       accepted,
                                       components=tracker.components(),
                                       counters=counters,
                                       algorithm=constants.ALGORITHM_COMPONENT,
                                       tracker=tracker.get_name())
    report.orientation = orientation
    return report
