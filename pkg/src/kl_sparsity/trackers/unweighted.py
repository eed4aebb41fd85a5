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
"""Vertex-grouped tracker for the maximum-size problem"""

import logging

from typing import (
    List,
    Optional,
)

import numpy as np

from kl_sparsity.datatypes.graph import SparsityParams
from kl_sparsity.pebble_component import ComponentTracker
from kl_sparsity.trackers.component_list import ComponentList

logger = logging.getLogger(name=__name__)


class UnweightedTracker(ComponentTracker):
    """Tracker for edges processed vertex by vertex.

    While the edges of the current first endpoint u0 are processed,
    mask[v] is true iff some component contains both u0 and v. The mask is
    rebuilt from the component list whenever the first endpoint changes.
    O(n) space.
    """
    name = "unweighted"
    requires_grouped_order = True

    def reset(self, n: int, params: SparsityParams) -> None:
        self.n = n
        self.params = params
        self.component_list = ComponentList(n, params.singleton_components)
        self.mask = np.zeros(n, dtype=bool)
        self.current: Optional[int] = None

    def recalculate(self, u: int) -> None:
        self.mask[:] = False
        for member in self.component_list:
            if u in member:
                self.mask[member] = True
        self.counters.recalculations += 1
        self.counters.tracker_merges += len(self.component_list)

    def in_common(self, u: int, v: int) -> bool:
        if self.current != u:
            self.current = u
            self.recalculate(u)
        return bool(self.mask[v])

    def absorb(self, component: List[int]) -> None:
        scanned = len(self.component_list)
        self.component_list.replace(component)
        self.mask[component] = True
        self.counters.tracker_merges += scanned

    def components(self) -> List[List[int]]:
        return [list(member) for member in self.component_list]
