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
"""k-indegree-bounded orientation of the accepted edges"""

import logging

from typing import (
    Iterator,
    List,
    Optional,
    Tuple,
)

from kl_sparsity.datatypes.report import SolveCounters
from kl_sparsity.exceptions import OrientationError

logger = logging.getLogger(name=__name__)

# (head, edge index) entry of an out-list
Arc = Tuple[int, int]


class AugmentingPath:
    """Directed path w_0 -> ... -> w_t in an orientation.

    `arc_slots[i]` is the position of the arc w_i -> w_{i+1} in the out-list
    of w_i when the path was found. Slots are a lookup hint only; paths
    built by hand leave them out.
    """

    def __init__(self,
                 vertices: List[int],
                 arc_slots: Optional[List[int]] = None) -> None:
        self.vertices = vertices
        self.arc_slots = arc_slots

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> 'AugmentingPath':
        return AugmentingPath(list(reversed(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"AugmentingPath({self.vertices})"


class Orientation:
    """Digraph D on vertices 0..n-1 in which every indegree is at most k.

    Each arc remembers the index of the input edge it orients, so the
    undirected shadow of D can be compared edge for edge with the accepted
    edge set. Out-lists are unordered; removing an arc swaps the last entry
    into its place.

    Not safe for concurrent use.
    """

    def __init__(self, n: int, k: int) -> None:
        self.n = n
        self.k = k
        self.out: List[List[Arc]] = [[] for _ in range(n)]
        self.indeg: List[int] = [0] * n
        self.arc_count = 0

        # Traversal scratch space. A vertex is visited in the current
        # traversal iff its stamp equals the current generation.
        self._generation = 0
        self._stamp: List[int] = [0] * n
        self._parent: List[int] = [-1] * n
        self._slot: List[int] = [-1] * n

    def indegree(self, v: int) -> int:
        return self.indeg[v]

    def max_indegree(self) -> int:
        return max(self.indeg, default=0)

    def arcs(self) -> Iterator[Tuple[int, int, int]]:
        """Yields (tail, head, edge index) for every arc."""
        for tail, out_list in enumerate(self.out):
            for head, edge_index in out_list:
                yield tail, head, edge_index

    def has_arc(self, tail: int, head: int) -> bool:
        return any(h == head for h, _ in self.out[tail])

    def shadow_edge_indices(self) -> List[int]:
        """Sorted edge indices carried by the arcs."""
        return sorted(edge_index for _, _, edge_index in self.arcs())

    def shadow_pairs(self) -> List[Tuple[int, int]]:
        """Sorted undirected endpoint pairs of the arcs, with multiplicity."""
        return sorted((min(t, h), max(t, h)) for t, h, _ in self.arcs())

    def add_arc(self, tail: int, head: int, edge_index: int = -1) -> None:
        if tail == head:
            raise OrientationError(f"loop arc on vertex {tail}")
        if self.indeg[head] >= self.k:
            raise OrientationError(
                f"vertex {head} already has indegree {self.k}")
        self.out[tail].append((head, edge_index))
        self.indeg[head] += 1
        self.arc_count += 1

    def insert_arc(self, u: int, v: int, edge_index: int = -1) -> int:
        """Orients a newly accepted edge uv and returns the head vertex.

        The arc points at v when v has spare indegree, otherwise at u. The
        caller guarantees that one of the two has room.
        """
        if self.indeg[v] < self.k:
            self.add_arc(u, v, edge_index)
            return v
        assert self.indeg[u] < self.k, (
            f"both endpoints of {u}-{v} have indegree {self.k}")
        self.add_arc(v, u, edge_index)
        return u

    def _deficient_sources(self, u: int, v: int, generation: int) -> List[int]:
        """Marks and returns every w outside {u, v} with indegree below k."""
        sources = []
        k = self.k
        indeg = self.indeg
        stamp = self._stamp
        parent = self._parent
        for w in range(self.n):
            if indeg[w] < k and w != u and w != v:
                stamp[w] = generation
                parent[w] = -1
                sources.append(w)
        return sources

    def find_path_from_deficient(
            self,
            u: int,
            v: int,
            counters: Optional[SolveCounters] = None
    ) -> Optional[AugmentingPath]:
        """Breadth-first search from all deficient vertices at once.

        Returns a path from some w not in {u, v} with indegree below k to u
        or v, or None. u and v only ever terminate the search.
        """
        self._generation += 1
        generation = self._generation
        stamp = self._stamp
        parent = self._parent
        slot = self._slot
        out = self.out

        queue = self._deficient_sources(u, v, generation)
        touches = len(queue)
        found = -1
        head_idx = 0
        while head_idx < len(queue) and found < 0:
            tail = queue[head_idx]
            head_idx += 1
            for pos, (head, _) in enumerate(out[tail]):
                if stamp[head] == generation:
                    continue
                stamp[head] = generation
                parent[head] = tail
                slot[head] = pos
                touches += 1
                if head == u or head == v:
                    found = head
                    break
                queue.append(head)

        if counters is not None:
            counters.path_searches += 1
            counters.path_search_touches += touches
        if found < 0:
            return None

        vertices = [found]
        slots = []
        curr = found
        while parent[curr] != -1:
            slots.append(slot[curr])
            curr = parent[curr]
            vertices.append(curr)
        vertices.reverse()
        slots.reverse()
        return AugmentingPath(vertices, slots)

    def _locate_arc(self, tail: int, head: int, hint: int) -> int:
        out_list = self.out[tail]
        if 0 <= hint < len(out_list) and out_list[hint][0] == head:
            return hint
        for pos, (h, _) in enumerate(out_list):
            if h == head:
                return pos
        raise OrientationError(f"arc {tail}->{head} is not in the orientation")

    def reverse_path(self,
                     path: AugmentingPath,
                     counters: Optional[SolveCounters] = None) -> None:
        """Reverses every arc of the path.

        Interior indegrees are unchanged, the first vertex gains one and the
        last vertex loses one. The path is validated before anything moves.
        """
        vertices = path.vertices
        if len(vertices) < 2:
            raise OrientationError("a path needs at least one arc")
        if len(set(vertices)) != len(vertices):
            raise OrientationError(f"path {vertices} repeats a vertex")
        if self.indeg[vertices[0]] >= self.k:
            raise OrientationError(
                f"path source {vertices[0]} has no spare indegree")

        hints = path.arc_slots or [-1] * (len(vertices) - 1)
        positions = [
            self._locate_arc(vertices[i], vertices[i + 1], hints[i])
            for i in range(len(vertices) - 1)
        ]

        for i, pos in enumerate(positions):
            tail = vertices[i]
            head = vertices[i + 1]
            out_list = self.out[tail]
            _, edge_index = out_list[pos]
            last = out_list.pop()
            if pos < len(out_list):
                out_list[pos] = last
            self.out[head].append((tail, edge_index))

        self.indeg[vertices[0]] += 1
        self.indeg[vertices[-1]] -= 1
        if counters is not None:
            counters.arc_reversals += len(positions)

    def unreachable_from_deficient(
            self,
            u: int,
            v: int,
            counters: Optional[SolveCounters] = None) -> List[int]:
        """Vertices not reachable from {w not in {u, v} : indegree(w) < k}.

        One full traversal; the result is in ascending vertex order.
        """
        self._generation += 1
        generation = self._generation
        stamp = self._stamp
        out = self.out

        queue = self._deficient_sources(u, v, generation)
        head_idx = 0
        while head_idx < len(queue):
            tail = queue[head_idx]
            head_idx += 1
            for head, _ in out[tail]:
                if stamp[head] != generation:
                    stamp[head] = generation
                    queue.append(head)

        if counters is not None:
            counters.component_searches += 1
            counters.component_search_touches += len(queue)
        return [w for w in range(self.n) if stamp[w] != generation]

    def __repr__(self) -> str:
        return f"Orientation(n={self.n}, k={self.k}, arcs={self.arc_count})"
