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
"""Shared fixtures"""

import os
import sys
import pytest

sys.path.append(os.path.dirname(os.path.realpath(__file__)) + "/../")

from kl_sparsity import edge_list  # noqa: E402
from kl_sparsity.datatypes.graph import SparsityParams  # noqa: E402

DATA_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture
def laman():
    """(2, 3), the parameters of generic rigidity in the plane"""
    return SparsityParams(2, 3)


@pytest.fixture
def merge_example_path():
    return data_path("merge_example.txt")


@pytest.fixture
def merge_example_graph(merge_example_path):
    return edge_list.read_edge_list(merge_example_path)


@pytest.fixture
def chord_example_path():
    return data_path("chord_example.txt")


@pytest.fixture
def chord_example_graph(chord_example_path):
    return edge_list.read_edge_list(chord_example_path)
