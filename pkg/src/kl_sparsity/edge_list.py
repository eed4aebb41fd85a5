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
"""Reads and writes edge-list files.

The format is line based. The first line that is neither blank nor a
comment holds "n m"; it is followed by exactly m lines "u v [w]" with
0-based vertex ids and an optional real weight. Lines starting with '#'
are comments.
"""

import logging
import math
import sys

from typing import (
    IO,
    List,
    Optional,
    Sequence,
    TypeVar,
    Union,
)

from kl_sparsity import constants
from kl_sparsity.datatypes.graph import Edge, WeightedMultigraph
from kl_sparsity.exceptions import GraphError, GraphFormatError

logger = logging.getLogger(name=__name__)

STDIN_PATH = "-"
EdgeLike = TypeVar("EdgeLike", bound=Sequence)


def _parse_int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{what} {token!r} is not an integer",
                               line_number)


def _parse_weight(token: str, line_number: int) -> float:
    try:
        weight = float(token)
    except ValueError:
        raise GraphFormatError(f"weight {token!r} is not a number",
                               line_number)
    if not math.isfinite(weight):
        raise GraphFormatError(f"weight {token!r} is not finite", line_number)
    return weight


def parse_edge_list(text: str) -> WeightedMultigraph:
    """Parses the content of an edge-list file.

    Raises GraphFormatError naming the offending line on any malformed,
    missing or surplus line.
    """
    n = -1
    m = -1
    header_line = -1
    edges: List[Edge] = []
    for line_number, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 2:
                raise GraphFormatError(
                    f"expected header 'n m', got {line!r}", line_number)
            n = _parse_int(parts[0], "vertex count", line_number)
            m = _parse_int(parts[1], "edge count", line_number)
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be non-negative",
                                       line_number)
            header_line = line_number
            continue

        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges",
                                   line_number)
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"expected 'u v [w]', got {line!r}",
                                   line_number)
        u = _parse_int(parts[0], "vertex", line_number)
        v = _parse_int(parts[1], "vertex", line_number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}",
                line_number)
        if u == v:
            raise GraphFormatError(f"loop on vertex {u}", line_number)
        weight = (_parse_weight(parts[2], line_number)
                  if len(parts) == 3 else constants.DEFAULT_WEIGHT)
        edges.append((u, v, weight))

    if n < 0:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != m:
        raise GraphFormatError(
            f"header declares {m} edges but {len(edges)} were found",
            header_line)

    try:
        return WeightedMultigraph(n, edges)
    except GraphError as err:
        raise GraphFormatError(str(err))


def decode_edge_list(data: Union[bytes, str], source: str) -> str:
    """UTF-8 text of an edge list, naming the line of the first bad byte."""
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as err:
        line_number = data.count(b"\n", 0, err.start) + 1
        raise GraphFormatError(f"{source} is not valid UTF-8", line_number)


def read_edge_list(path: Optional[str] = None,
                   stream: Optional[IO] = None) -> WeightedMultigraph:
    """Reads a graph from `path`, or from stdin when path is None or '-'."""
    if path is None or path == STDIN_PATH:
        if stream is None:
            stream = sys.stdin.buffer
        logger.debug("Reading edge list from stdin")
        return parse_edge_list(decode_edge_list(stream.read(), "stdin"))
    logger.info("Reading edge list %s", path)
    try:
        with open(path, "rb") as edge_file:
            data = edge_file.read()
    except OSError as err:
        raise GraphFormatError(f"cannot read {path}: {err.strerror}")
    return parse_edge_list(decode_edge_list(data, path))



def serialize_edge_list(graph: WeightedMultigraph,
                        comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {comment_line}"
                     for comment_line in comment.splitlines())
    lines.append(f"{graph.n} {graph.m}")
    for u, v, w in graph.edges:
        lines.append(f"{u} {v} {w!r}")
    return "\n".join(lines) + "\n"


def write_edge_list(graph: WeightedMultigraph,
                    path: Optional[str] = None,
                    comment: Optional[str] = None) -> None:
    content = serialize_edge_list(graph, comment)
    if path is None or path == STDIN_PATH:
        sys.stdout.write(content)
        return
    with open(path, "w") as edge_file:
        edge_file.write(content)
    logger.info("Wrote %d edges to %s", graph.m, path)


def _bucket_by_first_endpoint(firsts: Sequence[int]) -> List[int]:
    """Stable counting sort of positions by their first endpoint."""
    if not firsts:
        return []
    buckets: List[List[int]] = [[] for _ in range(max(firsts) + 1)]
    for pos, first in enumerate(firsts):
        buckets[first].append(pos)
    return [pos for bucket in buckets for pos in bucket]


def group_edges_by_endpoint(edges: Sequence[EdgeLike]) -> List[EdgeLike]:
    """Reorders edges so that edges with the same first endpoint are
    consecutive, in ascending endpoint order and otherwise in input order.
    """
    order = _bucket_by_first_endpoint([edge[0] for edge in edges])
    return [edges[pos] for pos in order]


def grouped_edge_order(graph: WeightedMultigraph) -> List[int]:
    """Edge indices in the order of `group_edges_by_endpoint`."""
    return _bucket_by_first_endpoint([u for u, _, _ in graph.edges])
