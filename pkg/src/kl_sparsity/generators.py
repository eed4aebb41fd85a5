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
"""Random multigraph generation for benchmarks and fixtures"""

import logging

from typing import Optional

import numpy as np

from kl_sparsity.datatypes.graph import WeightedMultigraph
from kl_sparsity.exceptions import GraphError

logger = logging.getLogger(name=__name__)


def random_multigraph(n: int,
                      m: int,
                      seed: int,
                      max_weight: Optional[int] = None) -> WeightedMultigraph:
    """Multigraph whose m edges have independent, uniform endpoint pairs.

    Parallel edges are allowed, loops are not. Weights are integers drawn
    uniformly from 1..max_weight, or all 1 when max_weight is None. The
    same (n, m, seed, max_weight) always gives the same graph.
    """
    if n < 0 or m < 0:
        raise GraphError(f"n and m must be non-negative (n={n}, m={m})")
    if m > 0 and n < 2:
        raise GraphError("edges need at least two vertices")
    if max_weight is not None and max_weight < 1:
        raise GraphError(f"max weight must be positive, got {max_weight}")

    rng = np.random.default_rng(seed)
    tails = rng.integers(0, n, size=m) if m else np.zeros(0, dtype=np.int64)
    heads = (rng.integers(0, n - 1, size=m)
             if m else np.zeros(0, dtype=np.int64))
    # Skip over the tail so that no loop is drawn.
    heads = heads + (heads >= tails)
    if max_weight is None:
        weights = np.ones(m)
    else:
        weights = rng.integers(1, max_weight + 1, size=m).astype(float)

    logger.debug("Generated multigraph n=%d m=%d seed=%d", n, m, seed)
    return WeightedMultigraph(
        n, zip(tails.tolist(), heads.tolist(), weights.tolist()))
