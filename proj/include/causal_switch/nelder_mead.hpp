// Copyright 2026 The causal-switch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace causal_switch {

struct NelderMeadOptions {
    int max_iterations = 2000;
    /// Stop once every vertex lies within this (max-norm) distance of the best.
    double simplex_tolerance = 1e-10;
    /// Edge length of the initial axis-aligned simplex.
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    bool converged = false;
};

/// Minimizes `f` with the Nelder-Mead simplex method (standard coefficients:
/// reflection 1, expansion 2, contraction 1/2, shrink 1/2). The returned
/// point is never worse than `x0`.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

}  // namespace causal_switch
