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
"""Solver results and operation counters"""

import logging

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

from kl_sparsity.datatypes.graph import WeightedMultigraph

logger = logging.getLogger(name=__name__)


class SolveCounters:
    """Operation counts collected during one solver run.

    The traversal and matrix counters are the quantities whose total grows
    quadratically in n for the component solver.
    """

    def __init__(self) -> None:
        self.path_searches = 0
        self.path_search_touches = 0
        self.component_searches = 0
        self.component_search_touches = 0
        self.arc_reversals = 0
        self.matrix_writes = 0
        self.redundant_writes = 0
        self.tracker_merges = 0
        self.recalculations = 0
        self.components_formed = 0
        # Largest number of path searches spent on a single edge.
        self.max_searches_per_edge = 0

    @property
    def traversal_touches(self) -> int:
        return self.path_search_touches + self.component_search_touches

    @property
    def counter_total(self) -> int:
        return self.traversal_touches + self.matrix_writes

    def as_dict(self) -> Dict[str, int]:
        return {
            'path_searches': self.path_searches,
            'path_search_touches': self.path_search_touches,
            'component_searches': self.component_searches,
            'component_search_touches': self.component_search_touches,
            'arc_reversals': self.arc_reversals,
            'matrix_writes': self.matrix_writes,
            'redundant_writes': self.redundant_writes,
            'tracker_merges': self.tracker_merges,
            'recalculations': self.recalculations,
            'components_formed': self.components_formed,
            'max_searches_per_edge': self.max_searches_per_edge,
            'counter_total': self.counter_total,
        }


class SolveReport:
    """Outcome of a solver run.

    :ivar List[int] accepted: accepted edge indices, in processing order.
    :ivar float total_weight: summed weight of the accepted edges.
    :ivar Optional[List[List[int]]] components: final (k, ell)-components,
        or None for solvers that do not track them.
    :ivar SolveCounters counters: operation counts of the run.
    """

    def __init__(self,
                 accepted: List[int],
                 total_weight: float,
                 components: Optional[List[List[int]]] = None,
                 counters: Optional[SolveCounters] = None,
                 algorithm: str = "",
                 tracker: str = "") -> None:
        self.accepted = accepted
        self.total_weight = total_weight
        self.components = components
        self.counters = counters if counters is not None else SolveCounters()
        self.algorithm = algorithm
        self.tracker = tracker
        self.orientation: Any = None

    @classmethod
    def from_accepted(cls,
                      graph: WeightedMultigraph,
                      accepted: List[int],
                      components: Optional[List[List[int]]] = None,
                      counters: Optional[SolveCounters] = None,
                      algorithm: str = "",
                      tracker: str = "") -> 'SolveReport':
        return cls(accepted, graph.total_weight(accepted), components,
                   counters, algorithm, tracker)

    def accepted_sorted(self) -> List[int]:
        return sorted(self.accepted)

    def __repr__(self) -> str:
        return (f"SolveReport(algorithm={self.algorithm!r}, "
                f"accepted={len(self.accepted)}, "
                f"total_weight={self.total_weight})")
