# Copyright 2026 The commfibre Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fibres of commutator word maps over finite p-groups."""

import json as _json

from ._core import (  # noqa: F401
    CommfibreError,
    Field,
    LieAlgebra,
    Presentation,
    __version__,
    brute_fibres,
    builtin,
    builtin_names,
    class_number,
    classify,
    conjugacy_count,
    degree_counts,
    direct_sum,
    fibre_count,
    fibre_prob,
    kv_vectors,
    l1_distance,
    parse,
    rank_profile,
    reduce,
    sharp_bound_squared,
    uniformity_bound_squared,
    validate,
    verify,
    zeta,
    zeta_strata,
)
from ._core import analyze_json as _analyze_json


def analyze(algebra, ts=(1,), verify=False):
    """Full report as a dict (same layout as ``commfibre analyze --format json``)."""
    return _json.loads(_analyze_json(algebra, list(ts), verify))
