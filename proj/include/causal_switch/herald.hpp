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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "causal_switch/qmat.hpp"

namespace causal_switch {

/// Outcome of measuring the control qubit of a particle ⊗ control state in
/// the Fourier basis {|+>, |->}. A conditional state is empty when its
/// outcome has (numerically) zero probability.
struct HeraldOutcome {
    double prob_plus;
    double prob_minus;
    std::optional<DensityMatrix> state_plus;
    std::optional<DensityMatrix> state_minus;
};

/// Outcomes with probability below this carry no conditional state.
inline constexpr double kZeroProbability = 1e-14;

HeraldOutcome herald_measure(const DensityMatrix& joint);

/// Y state Y: undoes the Y error heralded by the |-> outcome.
DensityMatrix correct_minus(const DensityMatrix& state_minus);

/// p * q
double heralded_success_probability(double p, double q);

/// <psi| rho |psi> for a normalized pure target.
double pure_state_fidelity(std::span<const cplx> psi, const DensityMatrix& rho);

using QubitState = std::array<cplx, 2>;

/// {|0>, |1>, |+>, |->}
std::vector<QubitState> bb84_states();

struct InputStatistics {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double mean_fidelity = 0;  // over heralded trials; 0 when there were none
};

struct HeraldStatistics {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double success_frequency = 0;
    /// sqrt(f (1 - f) / n) with f the empirical frequency.
    double standard_error = 0;
    double analytic_probability = 0;
    /// Mean fidelity of the corrected heralded states with the inputs.
    double mean_fidelity = 0;
    double min_fidelity = 0;
    /// Key-rate multiplier of a heralded single-qubit protocol relative to a
    /// noiseless one; equals the success probability p q.
    double key_rate_factor = 0;
    std::vector<InputStatistics> per_input;
};

/// Monte Carlo run of the heralded protocol over the SWITCH of bit_flip(p)
/// and phase_flip(q) with control |+>. Trial t draws from its own RNG
/// substream of `seed`: it picks an input uniformly from `input_states`,
/// samples the control outcome from the Born rule, and on |-> applies the Y
/// correction and scores the fidelity with the input.
HeraldStatistics monte_carlo_herald(double p, double q, std::uint64_t n_trials, std::uint64_t seed,
                                    std::span<const QubitState> input_states);

}  // namespace causal_switch
