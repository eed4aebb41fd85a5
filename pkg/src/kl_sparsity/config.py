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
"""Run and bench configuration.

Values come from command-line flags and, optionally, a YAML file given
with --config. A flag that was set on the command line wins over the file.
"""

import logging

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

import yaml

from kl_sparsity import constants
from kl_sparsity.datatypes.graph import SparsityParams, WeightedMultigraph
from kl_sparsity.exceptions import ConfigError

logger = logging.getLogger(name=__name__)


def read_config_file(filename: Optional[str]) -> Dict[str, Any]:
    """Reads a YAML mapping of option names to values"""
    if not filename:
        return {}
    # Use the C loader if available
    try:
        loader = yaml.CSafeLoader
    except AttributeError:
        loader = yaml.SafeLoader  # type: ignore[misc]
    try:
        with open(filename, 'r') as stream:
            contents = yaml.load(stream, Loader=loader)
    except OSError as err:
        raise ConfigError(f"cannot read config {filename}: {err.strerror}")
    except yaml.YAMLError as err:
        raise ConfigError(f"config {filename} is not valid YAML: {err}")
    if contents is None:
        return {}
    if not isinstance(contents, dict):
        raise ConfigError(f"config {filename} must be a mapping")
    logger.info("Loaded config %s", filename)
    return {
        str(key).replace("-", "_"): value
        for key, value in contents.items()
    }


def _check_file_value(key: str, value: Any, default: Any) -> None:
    """Rejects file values whose type does not match the option's default.

    Options without a default take strings.
    """
    if isinstance(default, bool):
        valid = isinstance(value, bool)
    elif isinstance(default, int):
        valid = isinstance(value, int) and not isinstance(value, bool)
    elif isinstance(default, list):
        valid = isinstance(value, list)
    elif isinstance(default, str) or default is None:
        valid = value is None or isinstance(value, str)
    else:
        valid = True
    if not valid:
        raise ConfigError(
            f"config key {key!r} has a value of the wrong type: {value!r}")


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _merge(cli_values: Dict[str, Any], file_values: Dict[str, Any],
           defaults: Dict[str, Any]) -> Dict[str, Any]:
    unknown = set(file_values) - set(defaults)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, value in file_values.items():
        _check_file_value(key, value, defaults[key])

    merged = dict(defaults)
    merged.update(file_values)
    merged.update({
        key: value
        for key, value in cli_values.items()
        if key in defaults and value is not None
    })
    return merged


class RunConfig:
    """Options of the solve command"""

    def __init__(self,
                 k: int = 2,
                 ell: int = 3,
                 algorithm: str = constants.ALGORITHM_COMPONENT,
                 tracker: str = constants.TRACKER_AUTO,
                 unweighted: bool = False,
                 components: bool = False,
                 stats: bool = False,
                 check: Optional[str] = None,
                 json: bool = False,
                 input_path: Optional[str] = None) -> None:
        self.k = k
        self.ell = ell
        self.algorithm = algorithm
        self.tracker = tracker
        self.unweighted = unweighted
        self.components = components
        self.stats = stats
        self.check = check
        self.json = json
        self.input_path = input_path

    @classmethod
    def defaults(cls) -> Dict[str, Any]:
        return dict(vars(cls()))

    @classmethod
    def from_sources(cls,
                     cli_values: Dict[str, Any],
                     file_values: Optional[Dict[str, Any]] = None
                     ) -> 'RunConfig':
        merged = _merge(cli_values, file_values or {}, cls.defaults())
        return cls(**merged)

    @property
    def params(self) -> SparsityParams:
        return SparsityParams(self.k, self.ell)

    def validate(self) -> None:
        """Checks everything that does not depend on the input graph.

        Raises ParameterError for invalid (k, ell) and ConfigError for
        inconsistent options.
        """
        params = self.params
        if self.algorithm not in constants.ALL_ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}")
        if self.tracker not in constants.ALL_TRACKERS:
            raise ConfigError(f"unknown tracker {self.tracker!r}")
        if self.check is not None and self.check not in constants.ALL_CHECKS:
            raise ConfigError(f"unknown check {self.check!r}")
        if self.algorithm == constants.ALGORITHM_NAIVE and self.components:
            raise ConfigError("the naive algorithm does not track components")
        if self.algorithm != constants.ALGORITHM_COMPONENT:
            return
        if (self.tracker == constants.TRACKER_DISJOINT
                and not params.disjoint_components):
            raise ConfigError(
                f"tracker disjoint needs ell <= k (k={self.k}, ell={self.ell})")

    def validate_for_graph(self, graph: WeightedMultigraph) -> None:
        self.validate()
        if (self.algorithm == constants.ALGORITHM_COMPONENT
                and self.tracker == constants.TRACKER_UNWEIGHTED
                and not self.unweighted and not graph.has_uniform_weights()):
            raise ConfigError(
                "tracker unweighted needs equal weights or --unweighted")


class BenchConfig:
    """Options of the bench command"""

    def __init__(self,
                 k: int = 2,
                 ell: int = 3,
                 sizes: Optional[List[int]] = None,
                 densities: Optional[List[float]] = None,
                 algorithms: Optional[List[str]] = None,
                 tracker: str = constants.TRACKER_AUTO,
                 seed: int = constants.DEFAULT_BENCH_SEED,
                 repeat: int = 1,
                 parallel: int = 1,
                 max_weight: Optional[int] = constants.DEFAULT_MAX_WEIGHT,
                 output: Optional[str] = None,
                 plot: Optional[str] = None) -> None:
        self.k = k
        self.ell = ell
        self.sizes = (list(sizes) if sizes is not None else list(
            constants.DEFAULT_BENCH_SIZES))
        self.densities = (list(densities) if densities is not None else list(
            constants.DEFAULT_BENCH_DENSITIES))
        self.algorithms = (list(algorithms) if algorithms is not None else
                           list(constants.DEFAULT_BENCH_ALGORITHMS))
        self.tracker = tracker
        self.seed = seed
        self.repeat = repeat
        self.parallel = parallel
        # 0 and None both mean unit weights
        self.max_weight = max_weight if max_weight else None
        self.output = output
        self.plot = plot

    @classmethod
    def defaults(cls) -> Dict[str, Any]:
        return dict(vars(cls()))

    @classmethod
    def from_sources(cls,
                     cli_values: Dict[str, Any],
                     file_values: Optional[Dict[str, Any]] = None
                     ) -> 'BenchConfig':
        merged = _merge(cli_values, file_values or {}, cls.defaults())
        return cls(**merged)

    @property
    def params(self) -> SparsityParams:
        return SparsityParams(self.k, self.ell)

    def validate(self) -> None:
        params = self.params
        if not all(
                isinstance(n, int) and not isinstance(n, bool)
                for n in self.sizes):
            raise ConfigError(f"bench sizes must be integers: {self.sizes}")
        if not all(_is_number(d) for d in self.densities):
            raise ConfigError(
                f"bench densities must be numbers: {self.densities}")
        if not self.sizes or any(n < 2 for n in self.sizes):
            raise ConfigError("bench sizes must be at least 2")
        if not self.densities or any(d <= 0 for d in self.densities):
            raise ConfigError("bench densities must be positive")
        for algorithm in self.algorithms:
            if algorithm not in constants.ALL_ALGORITHMS:
                raise ConfigError(f"unknown algorithm {algorithm!r}")
        if (constants.ALGORITHM_ORACLE in self.algorithms
                and max(self.sizes) > constants.ORACLE_MAX_VERTICES):
            raise ConfigError(
                f"the oracle only runs up to n={constants.ORACLE_MAX_VERTICES}")
        if self.tracker not in constants.ALL_TRACKERS:
            raise ConfigError(f"unknown tracker {self.tracker!r}")
        if (self.tracker == constants.TRACKER_DISJOINT
                and not params.disjoint_components):
            raise ConfigError(
                f"tracker disjoint needs ell <= k (k={self.k}, ell={self.ell})")
        if (self.tracker == constants.TRACKER_UNWEIGHTED
                and self.max_weight is not None):
            raise ConfigError("tracker unweighted needs --max-weight 0")
        if self.repeat < 1:
            raise ConfigError("repeat must be at least 1")
        if self.parallel < 0:
            raise ConfigError("parallel must be non-negative")
