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
"""Benchmark harness for the solvers.

Every run generates its own random multigraph from (n, m, seed), so runs
are independent and can be spread over a worker pool. Rows carry the wall
time and the operation counters; the component solver's counter total is
expected to grow about fourfold per doubling of n at a fixed density.
"""

import csv
import logging
import math
import multiprocessing
import psutil
import time

from typing import (
    Any,
    Dict,
    List,
    Optional,
    TextIO,
    Tuple,
)

from kl_sparsity import constants
from kl_sparsity import generators
from kl_sparsity import solvers
from kl_sparsity.config import BenchConfig
from kl_sparsity.datatypes.graph import SparsityParams
from kl_sparsity.datatypes.report import SolveCounters

logger = logging.getLogger(name=__name__)

try:
    import tqdm
except ImportError:
    tqdm = None  # type: ignore[assignment]

BenchRow = Dict[str, Any]


class BenchTask:
    """One solver run on one generated graph"""

    def __init__(self, n: int, m: int, k: int, ell: int, algorithm: str,
                 tracker: str, seed: int, max_weight: Optional[int]) -> None:
        self.n = n
        self.m = m
        self.k = k
        self.ell = ell
        self.algorithm = algorithm
        self.tracker = tracker
        self.seed = seed
        self.max_weight = max_weight

    def __repr__(self) -> str:
        return (f"BenchTask(n={self.n}, m={self.m}, k={self.k}, "
                f"ell={self.ell}, algorithm={self.algorithm}, "
                f"seed={self.seed})")


class ScalingSummary:
    """Growth of the counter total between two consecutive sizes"""

    def __init__(self, algorithm: str, density: float, n_small: int,
                 n_large: int, total_small: float, total_large: float,
                 matrix_writes_large: float) -> None:
        self.algorithm = algorithm
        self.density = density
        self.n_small = n_small
        self.n_large = n_large
        self.total_small = total_small
        self.total_large = total_large
        self.matrix_writes_large = matrix_writes_large

    @property
    def growth_per_doubling(self) -> float:
        """Counter-total ratio scaled to a doubling of n"""
        if self.total_small <= 0 or self.total_large <= 0:
            return math.nan
        exponent = (math.log(self.total_large / self.total_small) /
                    math.log(self.n_large / self.n_small))
        return 2.0**exponent

    @property
    def matrix_write_constant(self) -> float:
        """Matrix writes divided by n^2 at the larger size"""
        return self.matrix_writes_large / (self.n_large * self.n_large)

    def __repr__(self) -> str:
        return (f"ScalingSummary({self.algorithm}, density={self.density}, "
                f"n={self.n_small}->{self.n_large}, "
                f"growth={self.growth_per_doubling:.2f}, "
                f"c={self.matrix_write_constant:.3f})")


def build_tasks(config: BenchConfig) -> List[BenchTask]:
    tasks = []
    for n in config.sizes:
        for density in config.densities:
            m = int(round(density * n))
            for algorithm in config.algorithms:
                for run in range(config.repeat):
                    tasks.append(
                        BenchTask(n, m, config.k, config.ell, algorithm,
                                  config.tracker, config.seed + run,
                                  config.max_weight))
    return tasks


def run_task(task: BenchTask) -> BenchRow:
    graph = generators.random_multigraph(task.n, task.m, task.seed,
                                         task.max_weight)
    params = SparsityParams(task.k, task.ell)
    counters = SolveCounters()
    start = time.perf_counter()
    report = solvers.solve(graph,
                           params,
                           task.algorithm,
                           task.tracker,
                           unweighted=task.max_weight is None,
                           counters=counters)
    wall_time = time.perf_counter() - start

    row: BenchRow = {
        'n': task.n,
        'm': task.m,
        'k': task.k,
        'ell': task.ell,
        'algorithm': task.algorithm,
        'tracker': report.tracker,
        'seed': task.seed,
        'accepted': len(report.accepted),
        'wall_time': round(wall_time, 6),
    }
    stats = counters.as_dict()
    for column in constants.BENCH_CSV_COLUMNS:
        if column not in row:
            row[column] = stats[column]
    logger.debug("Finished %s in %.3fs", task, wall_time)
    return row


def worker_count(parallel: int) -> int:
    """Pool size for --parallel. 0 asks for half of the cores."""
    if parallel == 1:
        return 1
    max_core_num = max(round((psutil.cpu_count() or 2) / 2), 1)
    if parallel == 0 or parallel > max_core_num:
        return max_core_num
    return parallel


def run_tasks(tasks: List[BenchTask], parallel: int = 1) -> List[BenchRow]:
    workers = worker_count(parallel)
    logger.info("Running %d bench tasks on %d workers", len(tasks), workers)
    progress = None
    if tqdm is not None:
        progress = tqdm.tqdm(total=len(tasks), disable=None)

    rows: List[BenchRow] = []
    if workers == 1:
        for task in tasks:
            rows.append(run_task(task))
            if progress is not None:
                progress.update(1)
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            for row in pool.imap(run_task, tasks):
                rows.append(row)
                if progress is not None:
                    progress.update(1)
    if progress is not None:
        progress.close()
    return rows


def write_csv(rows: List[BenchRow], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=constants.BENCH_CSV_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def summarize(rows: List[BenchRow]) -> List[ScalingSummary]:
    """Per-doubling growth of the mean counter total.

    Rows are grouped by algorithm and density (m / n). Within a group the
    sizes are compared pairwise in ascending order.
    """
    totals: Dict[Tuple[str, float, int], List[Tuple[int, int]]] = {}
    for row in rows:
        density = round(row['m'] / row['n'], 6)
        key = (row['algorithm'], density, row['n'])
        totals.setdefault(key, []).append(
            (row['counter_total'], row['matrix_writes']))

    groups: Dict[Tuple[str, float], List[Tuple[int, float, float]]] = {}
    for (algorithm, density, n), values in totals.items():
        mean_total = sum(total for total, _ in values) / len(values)
        mean_writes = sum(writes for _, writes in values) / len(values)
        groups.setdefault((algorithm, density), []).append(
            (n, mean_total, mean_writes))

    summaries = []
    for (algorithm, density), points in sorted(groups.items()):
        points.sort()
        for small, large in zip(points, points[1:]):
            summaries.append(
                ScalingSummary(algorithm, density, small[0], large[0],
                               small[1], large[1], large[2]))
    return summaries


def log_summaries(summaries: List[ScalingSummary]) -> None:
    for summary in summaries:
        logger.info(
            "%s density=%.2f n %d -> %d: counter total x%.2f per doubling, "
            "matrix writes / n^2 = %.3f", summary.algorithm, summary.density,
            summary.n_small, summary.n_large, summary.growth_per_doubling,
            summary.matrix_write_constant)


def plot_rows(rows: List[BenchRow], image_name: str) -> bool:
    """Log-log plot of the counter total against n. Returns False when
    matplotlib is unavailable."""
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ModuleNotFoundError:
        logger.info("Could not import matplotlib. No plot is created")
        return False

    series: Dict[str, Dict[int, List[int]]] = {}
    for row in rows:
        label = f"{row['algorithm']} m/n={row['m'] / row['n']:.1f}"
        series.setdefault(label, {}).setdefault(row['n'],
                                                []).append(row['counter_total'])

    fig, ax = plt.subplots()
    for label, by_size in sorted(series.items()):
        sizes = sorted(by_size)
        means = [sum(by_size[n]) / len(by_size[n]) for n in sizes]
        ax.plot(sizes, means, marker="o", label=label)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("counter total")
    ax.legend()
    fig.savefig(image_name)
    plt.close(fig)
    logger.info("Saved plot %s", image_name)
    return True


def log_host_info() -> None:
    memory = psutil.virtual_memory()
    logger.info("Host: %s logical cores, %.1f GiB memory",
                psutil.cpu_count(), memory.total / float(1 << 30))


def run_bench(config: BenchConfig) -> List[BenchRow]:
    config.validate()
    log_host_info()
    rows = run_tasks(build_tasks(config), config.parallel)
    log_summaries(summarize(rows))
    return rows
