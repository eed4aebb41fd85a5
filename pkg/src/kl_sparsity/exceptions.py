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
"""Exceptions used throughout the package."""


class SparsityError(Exception):
    """Base error"""


class ParameterError(SparsityError):
    """Error for invalid (k, ell) parameters or tracker/range mismatches"""


class GraphError(SparsityError):
    """Error for invalid in-memory graphs"""


class GraphFormatError(SparsityError):
    """Error for malformed edge list files"""

    def __init__(self, message: str, line_number: int = -1) -> None:
        if line_number >= 0:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class OrientationError(SparsityError):
    """Error for operations on an orientation that do not match its arcs"""


class OracleLimitError(SparsityError):
    """Error for when the brute-force oracle is asked about a too large graph"""


class ConfigError(SparsityError):
    """Error for inconsistent run or bench configuration"""
