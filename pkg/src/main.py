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
"""Command-line interface"""

import argparse
import logging
import os
import sys

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

from kl_sparsity import commands, constants
from kl_sparsity.config import BenchConfig, RunConfig, read_config_file
from kl_sparsity.exceptions import SparsityError

logger = logging.getLogger(name=__name__)
LOG_FMT = '%(asctime)s.%(msecs)03d %(levelname)s %(module)s - %(funcName)s: %(message)s'


def _add_sparsity_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k",
                        type=int,
                        default=None,
                        help="k of the (k, ell) pair, default 2")
    parser.add_argument("--ell",
                        type=int,
                        default=None,
                        help="ell of the (k, ell) pair, 0 <= ell < 2k, "
                        "default 3")
    parser.add_argument("--config",
                        type=str,
                        default=None,
                        help="YAML file with default values for the options")


def get_cmdline_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Maximum-weight (k, ell)-sparse subgraphs by the "
        "pebble game")

    subparsers = parser.add_subparsers(dest='command')

    solve_parser = subparsers.add_parser(
        "solve",
        help="compute a maximum-weight (k, ell)-sparse subgraph of a graph")
    solve_parser.add_argument(
        "input_path",
        nargs="?",
        default=None,
        help="edge list file; stdin when omitted or '-'")
    _add_sparsity_args(solve_parser)
    solve_parser.add_argument("--algorithm",
                              choices=constants.ALL_ALGORITHMS,
                              default=None,
                              help="solver to run, default component")
    solve_parser.add_argument("--tracker",
                              choices=constants.ALL_TRACKERS,
                              default=None,
                              help="component tracker, default auto")
    solve_parser.add_argument(
        "--unweighted",
        action="store_true",
        default=None,
        help="ignore weights and find a maximum-size sparse subgraph")
    solve_parser.add_argument("--components",
                              action="store_true",
                              default=None,
                              help="print the final (k, ell)-components")
    solve_parser.add_argument("--stats",
                              action="store_true",
                              default=None,
                              help="print operation counters")
    solve_parser.add_argument(
        "--check",
        choices=constants.ALL_CHECKS,
        default=None,
        help="report whether the input graph is sparse, tight or spanning")
    solve_parser.add_argument("--json",
                              action="store_true",
                              default=None,
                              help="print the report as JSON")

    bench_parser = subparsers.add_parser(
        "bench",
        help="time the solvers on random multigraphs and write CSV rows")
    _add_sparsity_args(bench_parser)
    bench_parser.add_argument("--sizes",
                              type=int,
                              nargs="+",
                              default=None,
                              help="vertex counts to run")
    bench_parser.add_argument("--densities",
                              type=float,
                              nargs="+",
                              default=None,
                              help="edge to vertex ratios m / n")
    bench_parser.add_argument("--algorithms",
                              nargs="+",
                              choices=constants.ALL_ALGORITHMS,
                              default=None,
                              help="solvers to run")
    bench_parser.add_argument("--tracker",
                              choices=constants.ALL_TRACKERS,
                              default=None,
                              help="component tracker, default auto")
    bench_parser.add_argument("--seed",
                              type=int,
                              default=None,
                              help="seed of the first repetition")
    bench_parser.add_argument("--repeat",
                              type=int,
                              default=None,
                              help="graphs per size, seeds seed..seed+repeat-1")
    bench_parser.add_argument(
        "--parallel",
        type=int,
        default=None,
        help="worker processes; 0 uses half of the cores")
    bench_parser.add_argument(
        "--max-weight",
        dest="max_weight",
        type=int,
        default=None,
        help="weights are drawn from 1..max-weight; 0 for unit weights")
    bench_parser.add_argument("--output",
                              type=str,
                              default=None,
                              help="CSV file, stdout when omitted")
    bench_parser.add_argument("--plot",
                              type=str,
                              default=None,
                              help="PNG file for a log-log scaling plot")

    generate_parser = subparsers.add_parser(
        "generate",
        help="write a random multigraph with uniform, independent endpoint "
        "pairs as an edge list")
    generate_parser.add_argument("--n", type=int, required=True)
    generate_parser.add_argument("--m", type=int, required=True)
    generate_parser.add_argument("--seed", type=int, default=1)
    generate_parser.add_argument(
        "--max-weight",
        dest="max_weight",
        type=int,
        default=0,
        help="weights are drawn from 1..max-weight; 0 for unit weights")
    generate_parser.add_argument("--output",
                                 type=str,
                                 default=None,
                                 help="edge list file, stdout when omitted")

    return parser


def set_logging_level() -> None:
    if os.environ.get(constants.LOGLEVEL_ENV) == "debug":
        level = logging.DEBUG
    else:
        level = logging.INFO
    logging.basicConfig(
        level=level,
        format=LOG_FMT,
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )
    logger.debug("Logging level set")


def _cli_values(args: argparse.Namespace) -> Dict[str, Any]:
    values = dict(vars(args))
    values.pop('command', None)
    values.pop('config', None)
    return values


def main(argv: Optional[List[str]] = None) -> int:
    set_logging_level()

    parser = get_cmdline_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == 'solve':
            run_config = RunConfig.from_sources(_cli_values(args),
                                                read_config_file(args.config))
            return_code = commands.run_solve(run_config)
        elif args.command == 'bench':
            bench_config = BenchConfig.from_sources(
                _cli_values(args), read_config_file(args.config))
            return_code = commands.run_bench(bench_config)
        elif args.command == 'generate':
            return_code = commands.run_generate(args.n, args.m, args.seed,
                                                args.max_weight, args.output)
        else:
            parser.print_help(sys.stderr)
            return_code = constants.APP_EXIT_ERROR
    except SparsityError as err:
        logger.error("%s", err)
        return_code = constants.APP_EXIT_ERROR
    return return_code


if __name__ == "__main__":
    sys.exit(main())
