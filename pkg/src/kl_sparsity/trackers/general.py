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
"""Pair-matrix component tracker for the full range 0 <= ell < 2k"""

import logging

from typing import (
    List,
    Set,
    Tuple,
)

import numpy as np

from kl_sparsity.datatypes.graph import SparsityParams
from kl_sparsity.pebble_component import ComponentTracker
from kl_sparsity.trackers.component_list import ComponentList

logger = logging.getLogger(name=__name__)


class PairMatrix:
    """Symmetric n x n boolean matrix, true where a pair shares a component.

    Writes go through `mark_block`, which reports how many entries it set
    and how many of those were already true.
    """

    def __init__(self, n: int, identity: bool) -> None:
        self.n = n
        if identity:
            self.bits = np.eye(n, dtype=bool)
        else:
            self.bits = np.zeros((n, n), dtype=bool)

    def get(self, u: int, v: int) -> bool:
        return bool(self.bits[u, v])

    def mark_block(self, rows: np.ndarray,
                   cols: np.ndarray) -> Tuple[int, int]:
        """Sets every entry of rows x cols. Returns (writes, redundant)."""
        if rows.size == 0 or cols.size == 0:
            return 0, 0
        block = np.ix_(rows, cols)
        redundant = int(np.count_nonzero(self.bits[block]))
        self.bits[block] = True
        return rows.size * cols.size, redundant

    def mark_symmetric(self, rows: np.ndarray,
                       cols: np.ndarray) -> Tuple[int, int]:
        writes, redundant = self.mark_block(rows, cols)
        mirror_writes, mirror_redundant = self.mark_block(cols, rows)
        return writes + mirror_writes, redundant + mirror_redundant

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.bits, self.bits.T))

    def pairs(self) -> Set[Tuple[int, int]]:
        """Unordered pairs u < v with a true entry."""
        rows, cols = np.nonzero(np.triu(self.bits, k=1))
        return set(zip(rows.tolist(), cols.tolist()))


class AbsorbRecord:
    """Measurements of one absorb call.

    `overlap_sum` and `overlap_square_sum` are the sum and the sum of
    squares of |U_{i-1} & C_i| over the dropped components C_1..C_t, where
    U_i is the union of the first i of them.
    """

    def __init__(self, component_size: int) -> None:
        self.component_size = component_size
        self.deleted = 0
        self.overlaps: List[int] = []
        self.matrix_writes = 0
        self.redundant_writes = 0

    @property
    def overlap_sum(self) -> int:
        return sum(self.overlaps)

    @property
    def overlap_square_sum(self) -> int:
        return sum(overlap * overlap for overlap in self.overlaps)

    def __repr__(self) -> str:
        return (f"AbsorbRecord(size={self.component_size}, "
                f"deleted={self.deleted}, overlaps={self.overlaps}, "
                f"writes={self.matrix_writes}, "
                f"redundant={self.redundant_writes})")


class GeneralTracker(ComponentTracker):
    """Tracker backed by a pair matrix and the component list.

    in_common is a single matrix lookup. absorb merges the dropped
    components into a union U one by one, marking only the pairs between U
    and the part of the next component outside U, then the pairs involving
    the rest of the new component.
    """
    name = "general"

    def reset(self, n: int, params: SparsityParams) -> None:
        self.n = n
        self.params = params
        self.matrix = PairMatrix(n, identity=params.singleton_components)
        self.component_list = ComponentList(n, params.singleton_components)
        self.in_union = np.zeros(n, dtype=bool)
        self.in_member = np.zeros(n, dtype=bool)
        self.records: List[AbsorbRecord] = []

    def in_common(self, u: int, v: int) -> bool:
        return bool(self.matrix.bits[u, v])

    def absorb(self, component: List[int]) -> None:
        record = AbsorbRecord(len(component))
        union: List[int] = []
        in_union = self.in_union
        in_member = self.in_member

        def merge(member: List[int]) -> None:
            member_arr = np.asarray(member, dtype=np.intp)
            union_arr = np.asarray(union, dtype=np.intp)
            in_member[member_arr] = True
            union_only = union_arr[~in_member[union_arr]]
            member_only = member_arr[~in_union[member_arr]]
            in_member[member_arr] = False

            writes, redundant = self.matrix.mark_symmetric(
                union_only, member_only)
            record.matrix_writes += writes
            record.redundant_writes += redundant
            record.overlaps.append(len(member) - member_only.size)
            record.deleted += 1

            in_union[member_only] = True
            union.extend(member_only.tolist())

        scanned = len(self.component_list)
        self.component_list.replace(component, visit=merge)

        component_arr = np.asarray(component, dtype=np.intp)
        union_arr = np.asarray(union, dtype=np.intp)
        rest = component_arr[~in_union[component_arr]]
        writes, redundant = self.matrix.mark_symmetric(union_arr, rest)
        record.matrix_writes += writes
        record.redundant_writes += redundant
        writes, redundant = self.matrix.mark_block(rest, rest)
        record.matrix_writes += writes
        record.redundant_writes += redundant
        in_union[union_arr] = False

        self.records.append(record)
        self.counters.matrix_writes += record.matrix_writes
        self.counters.redundant_writes += record.redundant_writes
        self.counters.tracker_merges += scanned + len(union)
        logger.debug("Absorbed %s", record)

    def components(self) -> List[List[int]]:
        return [list(member) for member in self.component_list]
