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
"""Builds the solve report as a dictionary and renders it as JSON or text.

Both renderings come from the same dictionary so they carry the same
information line for line.
"""
import json
import logging

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

from kl_sparsity.datatypes.graph import SparsityParams, WeightedMultigraph
from kl_sparsity.datatypes.report import SolveReport

logger = logging.getLogger(name=__name__)


def _normalise_components(components: List[List[int]]) -> List[List[int]]:
    return sorted(sorted(component) for component in components)


def create_report_dict(graph: WeightedMultigraph,
                       params: SparsityParams,
                       report: SolveReport,
                       components: Optional[List[List[int]]] = None,
                       check: Optional[str] = None,
                       check_result: Optional[bool] = None,
                       include_stats: bool = False) -> Dict[str, Any]:
    """Accepted edges are listed in ascending input index order."""
    contents: Dict[str, Any] = {
        'n': graph.n,
        'm': graph.m,
        'k': params.k,
        'ell': params.ell,
        'algorithm': report.algorithm,
        'tracker': report.tracker,
        'accepted_count': len(report.accepted),
        'total_weight': report.total_weight,
        'accepted': [{
            'index': idx,
            'u': graph.endpoints(idx)[0],
            'v': graph.endpoints(idx)[1],
            'weight': graph.weight(idx),
        } for idx in report.accepted_sorted()],
    }
    if components is not None:
        contents['components'] = _normalise_components(components)
    if check is not None:
        contents['check'] = {'name': check, 'result': bool(check_result)}
    if include_stats:
        contents['stats'] = report.counters.as_dict()
    return contents


def render_json(contents: Dict[str, Any]) -> str:
    return json.dumps(contents, indent=2) + "\n"


def render_text(contents: Dict[str, Any]) -> str:
    lines = [
        f"n={contents['n']} m={contents['m']} k={contents['k']} "
        f"ell={contents['ell']} algorithm={contents['algorithm']} "
        f"tracker={contents['tracker'] or '-'}",
        f"edges: {contents['accepted_count']}",
        f"weight: {contents['total_weight']!r}",
    ]
    for edge in contents['accepted']:
        lines.append(
            f"edge {edge['index']} {edge['u']} {edge['v']} {edge['weight']!r}")
    if 'components' in contents:
        lines.append(f"components: {len(contents['components'])}")
        for component in contents['components']:
            lines.append("component " + " ".join(str(v) for v in component))
    if 'check' in contents:
        answer = "yes" if contents['check']['result'] else "no"
        lines.append(f"{contents['check']['name']}: {answer}")
    if 'stats' in contents:
        for key, value in contents['stats'].items():
            lines.append(f"stat {key} {value}")
    return "\n".join(lines) + "\n"
