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
"""Input graph representation and sparsity parameters"""

import logging
import math
import operator

from typing import (
    Iterable,
    List,
    Sequence,
    Tuple,
)

from kl_sparsity.exceptions import GraphError, ParameterError

logger = logging.getLogger(name=__name__)

Edge = Tuple[int, int, float]


class SparsityParams:
    """The (k, ell) pair of a sparsity matroid.

    Valid pairs satisfy 0 <= ell < 2k, so every valid pair has k >= 1 and
    a positive slack 2k - ell.
    """

    def __init__(self, k: int, ell: int) -> None:
        self.k = k
        self.ell = ell
        self.validate()

    def validate(self) -> None:
        if (not isinstance(self.k, int) or not isinstance(self.ell, int)
                or isinstance(self.k, bool) or isinstance(self.ell, bool)):
            raise ParameterError("k and ell must be integers")
        if self.k < 0 or self.ell < 0:
            raise ParameterError(
                f"k and ell must be non-negative (k={self.k}, ell={self.ell})")
        if self.ell >= 2 * self.k:
            raise ParameterError(
                f"ell must be smaller than 2k (k={self.k}, ell={self.ell})")

    @property
    def slack(self) -> int:
        """Bound 2k - ell on the endpoint indegree sum of an acceptable edge"""
        return 2 * self.k - self.ell

    @property
    def singleton_components(self) -> bool:
        """Single vertices are components exactly when ell >= k."""
        return self.ell >= self.k

    @property
    def disjoint_components(self) -> bool:
        return self.ell <= self.k

    def edge_bound(self, vertex_count: int) -> int:
        """max(k|X| - ell, 0) for a vertex set of the given size."""
        return max(self.k * vertex_count - self.ell, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsityParams):
            return NotImplemented
        return self.k == other.k and self.ell == other.ell

    def __hash__(self) -> int:
        return hash((self.k, self.ell))

    def __repr__(self) -> str:
        return f"SparsityParams(k={self.k}, ell={self.ell})"


def _vertex_id(value, edge_index: int) -> int:
    """Integer vertex id; floats and bools are rejected"""
    try:
        if isinstance(value, bool):
            raise TypeError
        return operator.index(value)
    except TypeError:
        raise GraphError(
            f"edge {edge_index} has a non-integer vertex {value!r}")


class WeightedMultigraph:
    """Immutable loopless multigraph on the vertices 0..n-1.

    Edges are (u, v, w) triples kept in input order; an edge is referred to
    by its position in that order throughout the package. Parallel edges
    are separate entries.
    """

    def __init__(self, n: int, edges: Iterable[Sequence]) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        checked: List[Edge] = []
        for idx, edge in enumerate(edges):
            if len(edge) == 2:
                u, v = edge
                w = 1.0
            elif len(edge) == 3:
                u, v, w = edge
            else:
                raise GraphError(f"edge {idx} is not a (u, v[, w]) tuple")
            u = _vertex_id(u, idx)
            v = _vertex_id(v, idx)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(
                    f"edge {idx} ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {idx} is a loop on vertex {u}")
            try:
                weight = float(w)
            except (TypeError, ValueError):
                raise GraphError(f"edge {idx} has a non-numeric weight {w!r}")
            if not math.isfinite(weight):
                raise GraphError(f"edge {idx} has a non-finite weight {w!r}")
            checked.append((u, v, weight))
        self._edges: Tuple[Edge, ...] = tuple(checked)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def weight(self, edge_index: int) -> float:
        return self._edges[edge_index][2]

    def endpoints(self, edge_index: int) -> Tuple[int, int]:
        u, v, _ = self._edges[edge_index]
        return u, v

    def total_weight(self, edge_indices: Iterable[int]) -> float:
        return float(sum(self._edges[idx][2] for idx in edge_indices))

    def has_uniform_weights(self) -> bool:
        if self.m == 0:
            return True
        first = self._edges[0][2]
        return all(w == first for _, _, w in self._edges)

    def with_unit_weights(self) -> 'WeightedMultigraph':
        return WeightedMultigraph(self.n, [(u, v, 1.0)
                                           for u, v, _ in self._edges])

    def edge_subgraph(self,
                      edge_indices: Iterable[int]) -> 'WeightedMultigraph':
        """Graph on the same vertices keeping only the given edges, in
        ascending index order."""
        return WeightedMultigraph(
            self.n, [self._edges[idx] for idx in sorted(edge_indices)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedMultigraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        return f"WeightedMultigraph(n={self.n}, m={self.m})"


def sort_edges(graph: WeightedMultigraph) -> List[int]:
    """Edge indices in non-increasing order of weight.

    Ties keep input order, which makes every solver and the oracle process
    the same sequence.
    """
    return sorted(range(graph.m), key=lambda idx: -graph.weight(idx))


def processing_order(graph: WeightedMultigraph) -> List[int]:
    """Sorted edge order without negative-weight edges.

    A negative edge never belongs to a maximum-weight sparse subgraph, so
    weighted solvers do not look at them.
    """
    order = [idx for idx in sort_edges(graph) if graph.weight(idx) >= 0]
    skipped = graph.m - len(order)
    if skipped:
        logger.info("Skipping %d negative-weight edges", skipped)
    return order
