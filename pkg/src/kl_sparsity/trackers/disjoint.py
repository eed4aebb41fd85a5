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
"""Representative-array tracker for 0 <= ell <= k"""

import logging

from typing import (
    Dict,
    List,
    Optional,
)

from kl_sparsity.datatypes.graph import SparsityParams
from kl_sparsity.pebble_component import ComponentTracker

logger = logging.getLogger(name=__name__)


class DisjointTracker(ComponentTracker):
    """Components are pairwise disjoint when ell <= k, so one representative
    per vertex is enough. O(n) space."""
    name = "disjoint"

    @classmethod
    def supports(cls, params: SparsityParams) -> bool:
        return params.disjoint_components

    def reset(self, n: int, params: SparsityParams) -> None:
        self.n = n
        self.params = params
        if params.singleton_components:
            self.representative: List[Optional[int]] = list(range(n))
        else:
            self.representative = [None] * n

    def in_common(self, u: int, v: int) -> bool:
        rep_u = self.representative[u]
        return rep_u is not None and rep_u == self.representative[v]

    def absorb(self, component: List[int]) -> None:
        head = component[0]
        for v in component:
            self.representative[v] = head
        self.counters.tracker_merges += len(component)

    def components(self) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for v, rep in enumerate(self.representative):
            if rep is not None:
                groups.setdefault(rep, []).append(v)
        return list(groups.values())
