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
"""Component tracker implementations"""

from typing import (
    List,
    Optional,
    Type,
)

from kl_sparsity import constants
from kl_sparsity.datatypes.graph import SparsityParams
from kl_sparsity.datatypes.report import SolveCounters
from kl_sparsity.exceptions import ParameterError
from kl_sparsity.pebble_component import ComponentTracker
from kl_sparsity.trackers import disjoint
from kl_sparsity.trackers import general
from kl_sparsity.trackers import unweighted

all_trackers: List[Type[ComponentTracker]] = [
    general.GeneralTracker,
    disjoint.DisjointTracker,
    unweighted.UnweightedTracker,
]


def get_tracker_class(name: str) -> Type[ComponentTracker]:
    for tracker_cls in all_trackers:
        if tracker_cls.get_name() == name:
            return tracker_cls
    raise ParameterError(f"unknown tracker {name!r}")


def resolve_tracker_name(name: str,
                         params: SparsityParams,
                         unweighted: bool = False) -> str:
    """Resolves `auto` to a concrete tracker name.

    The vertex-grouped tracker is only picked for maximum-size runs since
    its edge order changes tie-breaking.
    """
    if name != constants.TRACKER_AUTO:
        return name
    if unweighted:
        return constants.TRACKER_UNWEIGHTED
    if params.disjoint_components:
        return constants.TRACKER_DISJOINT
    return constants.TRACKER_GENERAL


def create_tracker(name: str,
                   n: int,
                   params: SparsityParams,
                   counters: Optional[SolveCounters] = None,
                   unweighted: bool = False) -> ComponentTracker:
    tracker_cls = get_tracker_class(
        resolve_tracker_name(name, params, unweighted))
    if not tracker_cls.supports(params):
        raise ParameterError(
            f"tracker {tracker_cls.get_name()} does not support "
            f"k={params.k}, ell={params.ell}")
    return tracker_cls(n, params, counters)


def applicable_trackers(params: SparsityParams) -> List[str]:
    return [
        tracker_cls.get_name() for tracker_cls in all_trackers
        if tracker_cls.supports(params)
    ]
