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

APP_EXIT_ERROR = 1
APP_EXIT_SUCCESS = 0

# Environment variables
LOGLEVEL_ENV = "KL_SPARSITY_LOGLEVEL"
SCALING_ENV = "KL_SPARSITY_SCALING"

# Subset enumeration guards of the brute-force oracle. Both are hard
# limits, the oracle raises instead of truncating.
ORACLE_MAX_VERTICES = 20
ORACLE_MAX_COMPONENT_VERTICES = 16

ALGORITHM_NAIVE = "naive"
ALGORITHM_COMPONENT = "component"
ALGORITHM_ORACLE = "oracle"
ALL_ALGORITHMS = [ALGORITHM_NAIVE, ALGORITHM_COMPONENT, ALGORITHM_ORACLE]

TRACKER_AUTO = "auto"
TRACKER_GENERAL = "general"
TRACKER_DISJOINT = "disjoint"
TRACKER_UNWEIGHTED = "unweighted"
ALL_TRACKERS = [
    TRACKER_AUTO, TRACKER_GENERAL, TRACKER_DISJOINT, TRACKER_UNWEIGHTED
]

CHECK_SPARSE = "sparse"
CHECK_TIGHT = "tight"
CHECK_SPANNING = "spanning"
ALL_CHECKS = [CHECK_SPARSE, CHECK_TIGHT, CHECK_SPANNING]

DEFAULT_WEIGHT = 1.0

# Bench defaults. Densities are edge/vertex ratios, m = density * n.
DEFAULT_BENCH_SIZES = [500, 1000, 2000]
DEFAULT_BENCH_DENSITIES = [8.0]
DEFAULT_BENCH_SEED = 1
DEFAULT_BENCH_ALGORITHMS = [ALGORITHM_COMPONENT]
DEFAULT_MAX_WEIGHT = 10

# Columns of the bench CSV, in order.
BENCH_CSV_COLUMNS = [
    "n", "m", "k", "ell", "algorithm", "tracker", "seed", "accepted",
    "wall_time", "path_search_touches", "component_search_touches",
    "arc_reversals", "matrix_writes", "redundant_writes", "tracker_merges",
    "counter_total"
]
