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
"""Brute-force sparsity checks over all vertex subsets.

Subsets of the vertex set are bit masks. For every mask the number of
induced edges i(X) is built incrementally: adding vertex v to a subset of
0..v-1 adds the edges between v and that subset. All tables have 2^n
entries, which is why the functions here refuse large graphs.
"""

import logging

from typing import (
    Iterator,
    List,
    Optional,
    Set,
    Tuple,
)

import numpy as np

from kl_sparsity import constants
from kl_sparsity.datatypes.graph import (SparsityParams, WeightedMultigraph,
                                         processing_order)
from kl_sparsity.exceptions import GraphError, OracleLimitError

logger = logging.getLogger(name=__name__)


class BlockSet:
    """Inclusion-maximal (k, ell)-blocks, each a sorted vertex list."""

    def __init__(self, blocks: List[List[int]]) -> None:
        self.blocks = sorted(blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[List[int]]:
        return iter(self.blocks)

    def as_sets(self) -> Set[frozenset]:
        return {frozenset(block) for block in self.blocks}

    def pair_relation(self) -> Set[Tuple[int, int]]:
        """Pairs u < v that lie in a common block."""
        pairs = set()
        for block in self.blocks:
            for i, u in enumerate(block):
                for v in block[i + 1:]:
                    pairs.add((u, v))
        return pairs

    def __repr__(self) -> str:
        return f"BlockSet({self.blocks})"


def _check_size(graph: WeightedMultigraph, limit: int) -> None:
    if graph.n > limit:
        raise OracleLimitError(
            f"oracle enumerates 2^n subsets and is limited to n <= {limit}, "
            f"got n={graph.n}")


def _multiplicities(graph: WeightedMultigraph,
                    edge_indices: Optional[List[int]] = None) -> np.ndarray:
    """n x n matrix of parallel-edge counts."""
    adjacency = np.zeros((graph.n, graph.n), dtype=np.int64)
    if edge_indices is None:
        edge_indices = list(range(graph.m))
    for idx in edge_indices:
        u, v = graph.endpoints(idx)
        adjacency[u, v] += 1
        adjacency[v, u] += 1
    return adjacency


def subset_sizes(n: int) -> np.ndarray:
    """|X| for every mask X in 0..2^n - 1."""
    sizes = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        sizes = np.concatenate([sizes, sizes + 1])
    return sizes


def induced_edge_counts(graph: WeightedMultigraph,
                        edge_indices: Optional[List[int]] = None
                        ) -> np.ndarray:
    """i(X) for every mask X, counting only the given edges."""
    adjacency = _multiplicities(graph, edge_indices)
    counts = np.zeros(1, dtype=np.int64)
    for v in range(graph.n):
        # Edges between v and each subset of 0..v-1.
        incident = np.zeros(1, dtype=np.int64)
        for w in range(v):
            incident = np.concatenate([incident, incident + adjacency[v, w]])
        counts = np.concatenate([counts, counts + incident])
    return counts


def subset_bounds(n: int, params: SparsityParams) -> np.ndarray:
    """max(k|X| - ell, 0) for every mask X."""
    return np.maximum(params.k * subset_sizes(n) - params.ell, 0)


def _mask_members(mask: int, n: int) -> List[int]:
    return [v for v in range(n) if mask >> v & 1]


def _pair_mask(n: int, u: int, v: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    return ((masks >> u) & (masks >> v) & 1).astype(np.int64)


def is_sparse(graph: WeightedMultigraph, params: SparsityParams) -> bool:
    """True iff every vertex subset X induces at most max(k|X| - ell, 0)
    edges."""
    _check_size(graph, constants.ORACLE_MAX_VERTICES)
    counts = induced_edge_counts(graph)
    return bool(np.all(counts <= subset_bounds(graph.n, params)))


def is_tight(graph: WeightedMultigraph, params: SparsityParams) -> bool:
    return (is_sparse(graph, params)
            and graph.m == params.edge_bound(graph.n))


def is_spanning(graph: WeightedMultigraph, params: SparsityParams) -> bool:
    """True iff some spanning subgraph of `graph` is (k, ell)-tight."""
    accepted = solve_greedy_oracle(graph.with_unit_weights(), params)
    return len(accepted) == params.edge_bound(graph.n)


def is_block(graph: WeightedMultigraph, params: SparsityParams,
             vertices: List[int]) -> bool:
    """Whether the nonempty vertex set induces max(k|X| - ell, 0) edges."""
    members = set(vertices)
    if not members:
        return False
    induced = sum(1 for u, v, _ in graph.edges
                  if u in members and v in members)
    return induced == params.edge_bound(len(members))


def enumerate_components(graph: WeightedMultigraph,
                         params: SparsityParams) -> BlockSet:
    """All inclusion-maximal (k, ell)-blocks of a sparse graph.

    A nonempty X is a block iff i(X) = max(k|X| - ell, 0); singletons are
    therefore blocks exactly when ell >= k.
    """
    _check_size(graph, constants.ORACLE_MAX_COMPONENT_VERTICES)
    counts = induced_edge_counts(graph)
    bounds = subset_bounds(graph.n, params)
    if np.any(counts > bounds):
        raise GraphError(
            f"graph is not ({params.k}, {params.ell})-sparse")

    sizes = subset_sizes(graph.n)
    block_masks = np.nonzero(counts == bounds)[0]
    block_masks = block_masks[block_masks != 0]
    # Larger blocks first, so a block is maximal iff no kept block covers it.
    by_size = block_masks[np.argsort(-sizes[block_masks], kind="stable")]
    maximal: List[int] = []
    for mask in by_size.tolist():
        if not any(mask & kept == mask for kept in maximal):
            maximal.append(mask)

    for i, first in enumerate(maximal):
        for second in maximal[i + 1:]:
            shared = bin(first & second).count("1")
            assert shared <= 1, "two components share more than one vertex"
            if params.disjoint_components:
                assert shared == 0, "components overlap although ell <= k"

    return BlockSet([_mask_members(mask, graph.n) for mask in maximal])


def solve_greedy_oracle(graph: WeightedMultigraph,
                        params: SparsityParams,
                        order: Optional[List[int]] = None) -> List[int]:
    """Matroid greedy with a brute-force independence test.

    Edges are processed in the solvers' order and an edge is accepted iff
    the accepted set stays (k, ell)-sparse. Returns the accepted indices in
    processing order.
    """
    _check_size(graph, constants.ORACLE_MAX_VERTICES)
    if order is None:
        order = processing_order(graph)
    bounds = subset_bounds(graph.n, params)
    counts = np.zeros(1 << graph.n, dtype=np.int64)
    accepted: List[int] = []
    for edge_index in order:
        u, v = graph.endpoints(edge_index)
        candidate = counts + _pair_mask(graph.n, u, v)
        if np.all(candidate <= bounds):
            counts = candidate
            accepted.append(edge_index)
    logger.info("Greedy oracle: n=%d m=%d k=%d ell=%d accepted=%d", graph.n,
                graph.m, params.k, params.ell, len(accepted))
    return accepted
