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
"""Fuzz edge_list.py"""

import os
import sys
import atheris
import pytest

sys.path.append(os.path.dirname(os.path.realpath(__file__)) + "/../../")

from kl_sparsity import edge_list  # noqa: E402
from kl_sparsity import exceptions  # noqa: E402


@pytest.mark.parametrize(
    "data",
    [
        b"random_data",
        b"3 2\n0 1\n1 2 0.5\n",
        b"# comment\n2 1\n0 1 nan\n",
        b"\xff\xfe 1 1",
    ]
)
@atheris.instrument_func
def test_TestOneInput(data):
    """Fuzz edge_list.parse_edge_list and the serializer"""
    fdp = atheris.FuzzedDataProvider(data)
    text = fdp.ConsumeUnicodeNoSurrogates(len(data))
    try:
        graph = edge_list.parse_edge_list(text)
    except exceptions.GraphFormatError:
        return

    # Anything that parses must survive a round trip unchanged
    serialized = edge_list.serialize_edge_list(graph)
    assert edge_list.parse_edge_list(serialized) == graph


def is_this_a_reproducer_run(argvs):
    """Check if the argvs command shows this is a reproducer run"""
    for arg in argvs:
        if os.path.isfile(arg):
            bname = os.path.basename(arg)

            # Assume a seed file does not have fuzz in its basename
            if "fuzz" not in bname:
                return True
    return False


def main():
    if not is_this_a_reproducer_run(sys.argv):
        atheris.instrument_all()

    atheris.Setup(
        sys.argv,
        test_TestOneInput,
        enable_python_coverage=True
    )
    atheris.Fuzz()


if __name__ == "__main__":
    main()
