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
"""Test edge_list.py"""

import io
import os
import sys
import pytest

sys.path.append(os.path.dirname(os.path.realpath(__file__)) + "/../")

import main  # noqa: E402
from kl_sparsity import constants  # noqa: E402
from kl_sparsity import edge_list  # noqa: E402
from kl_sparsity.datatypes.graph import WeightedMultigraph  # noqa: E402
from kl_sparsity.exceptions import GraphFormatError  # noqa: E402


def test_parse_with_comments_and_weights():
    graph = edge_list.parse_edge_list("""# a comment
3 3

0 1
1 2 2.5
  # indented comment
2 0 -1e3
""")
    assert graph.n == 3
    assert graph.edges == ((0, 1, 1.0), (1, 2, 2.5), (2, 0, -1000.0))


def test_parse_empty_graph():
    graph = edge_list.parse_edge_list("5 0\n")
    assert graph.n == 5
    assert graph.m == 0


def test_read_fixture(merge_example_graph):
    assert merge_example_graph.n == 8
    assert merge_example_graph.m == 11
    assert merge_example_graph.endpoints(10) == (4, 2)


def test_read_from_stream():
    graph = edge_list.read_edge_list("-", io.StringIO("2 1\n0 1 4\n"))
    assert graph.edges == ((0, 1, 4.0), )


def test_read_missing_file(tmpdir):
    with pytest.raises(GraphFormatError):
        edge_list.read_edge_list(os.path.join(tmpdir, "missing.txt"))


def test_read_from_byte_stream():
    graph = edge_list.read_edge_list("-", io.BytesIO(b"2 1\n0 1 4\n"))
    assert graph.edges == ((0, 1, 4.0), )


def test_read_undecodable_file(tmpdir):
    path = os.path.join(tmpdir, "binary.txt")
    with open(path, "wb") as f:
        f.write(b"2 1\n0 1 \xff\xfe\n")
    with pytest.raises(GraphFormatError) as exc_info:
        edge_list.read_edge_list(path)
    assert exc_info.value.line_number == 2

    with pytest.raises(GraphFormatError):
        edge_list.read_edge_list("-", io.BytesIO(b"\xff 1\n"))

    assert main.main(["solve", path]) == constants.APP_EXIT_ERROR


@pytest.mark.parametrize(("content", "line_number"), [
    ("3\n", 1),
    ("3 x\n", 1),
    ("# c\n3 2\n0 1\n", 2),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 1\n0 0\n", 2),
    ("3 1\n0 3\n", 2),
    ("3 1\n0 1 heavy\n", 2),
    ("3 1\n0 1 nan\n", 2),
    ("3 1\n0\n", 2),
    ("3 1\n0 1 1 1\n", 2),
    ("-1 0\n", 1),
])
def test_parse_errors_name_the_line(content, line_number):
    with pytest.raises(GraphFormatError) as err:
        edge_list.parse_edge_list(content)
    assert err.value.line_number == line_number
    assert str(err.value).startswith(f"line {line_number}: ")


def test_parse_missing_header():
    with pytest.raises(GraphFormatError):
        edge_list.parse_edge_list("# only a comment\n\n")


def test_serialize_then_parse():
    graph = WeightedMultigraph(4, [(0, 1, 0.1), (1, 2, 3.0), (0, 1, -2.75)])
    text = edge_list.serialize_edge_list(graph, comment="two lines\nof text")
    assert text.startswith("# two lines\n# of text\n4 3\n")
    assert edge_list.parse_edge_list(text) == graph


def test_write_edge_list(tmpdir):
    graph = WeightedMultigraph(3, [(0, 2, 1.5)])
    path = os.path.join(tmpdir, "graph.txt")
    edge_list.write_edge_list(graph, path)
    assert edge_list.read_edge_list(path) == graph


@pytest.mark.parametrize(("edges", "expected"), [
    ([(2, 0), (0, 1), (2, 3)], [(0, 1), (2, 0), (2, 3)]),
    ([(0, 1), (1, 2), (1, 0), (3, 2)], [(0, 1), (1, 2), (1, 0), (3, 2)]),
    ([(0, 3), (0, 1), (0, 2)], [(0, 3), (0, 1), (0, 2)]),
    ([], []),
])
def test_group_edges_by_endpoint(edges, expected):
    assert edge_list.group_edges_by_endpoint(edges) == expected


def test_grouped_edge_order():
    graph = WeightedMultigraph(4, [(3, 0), (1, 2), (3, 1), (1, 0)])
    assert edge_list.grouped_edge_order(graph) == [1, 3, 0, 2]
