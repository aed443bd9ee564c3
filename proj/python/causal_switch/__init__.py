# Copyright 2026 The causal-switch Authors
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

"""Quantum SWITCH of noisy qubit channels."""

from ._core import (
    binary_entropy,
    check_independence_hypotheses,
    crossover_p,
    dephasing_capacity,
    flip_switch_closed_form,
    flip_switch_output,
    herald_measure,
    heralded_success_probability,
    maximize_switched_coherent_information,
    monte_carlo_herald,
    search_flip_postselection,
    switch_correlated_demo,
    switch_flip_coherent_info,
    switched_flip_choi,
)

__all__ = [
    "binary_entropy",
    "check_independence_hypotheses",
    "crossover_p",
    "dephasing_capacity",
    "flip_switch_closed_form",
    "flip_switch_output",
    "herald_measure",
    "heralded_success_probability",
    "maximize_switched_coherent_information",
    "monte_carlo_herald",
    "search_flip_postselection",
    "switch_correlated_demo",
    "switch_flip_coherent_info",
    "switched_flip_choi",
]
