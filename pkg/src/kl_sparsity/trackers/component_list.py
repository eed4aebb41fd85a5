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
"""List of the current (k, ell)-components"""

import logging

from typing import (
    Callable,
    Iterator,
    List,
    Optional,
)

import numpy as np

logger = logging.getLogger(name=__name__)


class ComponentList:
    """The components of the accepted subgraph, newest first.

    Each component is a vertex list. Distinct components share at most one
    vertex, so a component lies inside a new one as soon as its first two
    vertices do.
    """

    def __init__(self, n: int, singletons: bool) -> None:
        self.n = n
        self.components: List[List[int]] = ([[v] for v in range(n)]
                                            if singletons else [])
        # Characteristic vector of the component being absorbed.
        self.in_new = np.zeros(n, dtype=bool)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[List[int]]:
        return iter(self.components)

    def total_size(self) -> int:
        return sum(len(member) for member in self.components)

    def is_contained(self, member: List[int]) -> bool:
        """Subset test against the marked new component."""
        if len(member) == 1:
            return bool(self.in_new[member[0]])
        return bool(self.in_new[member[0]] and self.in_new[member[1]])

    def replace(
        self,
        component: List[int],
        visit: Optional[Callable[[List[int]], None]] = None
    ) -> List[List[int]]:
        """Puts `component` first and drops every component inside it.

        `visit` sees the dropped components in list order. Returns the
        dropped components.
        """
        self.in_new[component] = True
        kept: List[List[int]] = []
        dropped: List[List[int]] = []
        for member in self.components:
            if self.is_contained(member):
                dropped.append(member)
                if visit is not None:
                    visit(member)
            else:
                kept.append(member)
        self.in_new[component] = False
        self.components = [list(component)] + kept
        return dropped
