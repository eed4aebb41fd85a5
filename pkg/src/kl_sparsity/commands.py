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
"""High-level routines and CLI entrypoints"""

import logging
import sys

from typing import (
    List,
    Optional,
    TextIO,
)

from kl_sparsity import bench
from kl_sparsity import checks
from kl_sparsity import constants
from kl_sparsity import edge_list
from kl_sparsity import generators
from kl_sparsity import json_report
from kl_sparsity import oracle
from kl_sparsity import solvers
from kl_sparsity.config import BenchConfig, RunConfig
from kl_sparsity.exceptions import SparsityError

logger = logging.getLogger(name=__name__)


def solve_to_text(config: RunConfig,
                  stream: Optional[TextIO] = None) -> str:
    """Runs the solve command and returns the rendered report.

    Raises SparsityError subclasses on bad input or configuration.
    """
    config.validate()
    graph = edge_list.read_edge_list(config.input_path, stream)
    config.validate_for_graph(graph)
    params = config.params

    report = solvers.solve(graph, params, config.algorithm, config.tracker,
                           config.unweighted)

    components: Optional[List[List[int]]] = None
    if config.components:
        if config.algorithm == constants.ALGORITHM_ORACLE:
            accepted_graph = graph.edge_subgraph(report.accepted)
            components = oracle.enumerate_components(accepted_graph,
                                                     params).blocks
        else:
            components = report.components

    check_result = None
    if config.check is not None:
        check_result = checks.run_check(
            config.check,
            graph,
            params,
            brute_force=config.algorithm == constants.ALGORITHM_ORACLE)

    contents = json_report.create_report_dict(graph,
                                              params,
                                              report,
                                              components=components,
                                              check=config.check,
                                              check_result=check_result,
                                              include_stats=config.stats)
    if config.json:
        return json_report.render_json(contents)
    return json_report.render_text(contents)


def run_solve(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    try:
        output = solve_to_text(config, stream)
    except SparsityError as err:
        logger.error("solve failed: %s", err)
        return constants.APP_EXIT_ERROR
    sys.stdout.write(output)
    return constants.APP_EXIT_SUCCESS


def run_bench(config: BenchConfig) -> int:
    try:
        rows = bench.run_bench(config)
    except SparsityError as err:
        logger.error("bench failed: %s", err)
        return constants.APP_EXIT_ERROR

    if config.output:
        with open(config.output, "w", newline="") as csv_file:
            bench.write_csv(rows, csv_file)
        logger.info("Wrote %d bench rows to %s", len(rows), config.output)
    else:
        bench.write_csv(rows, sys.stdout)
    if config.plot:
        bench.plot_rows(rows, config.plot)
    return constants.APP_EXIT_SUCCESS


def run_generate(n: int,
                 m: int,
                 seed: int,
                 max_weight: Optional[int] = None,
                 output: Optional[str] = None) -> int:
    try:
        graph = generators.random_multigraph(n, m, seed, max_weight or None)
    except SparsityError as err:
        logger.error("generate failed: %s", err)
        return constants.APP_EXIT_ERROR
    comment = f"random multigraph n={n} m={m} seed={seed}"
    if max_weight:
        comment += f" max_weight={max_weight}"
    edge_list.write_edge_list(graph, output, comment)
    return constants.APP_EXIT_SUCCESS
