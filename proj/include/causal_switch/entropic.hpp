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

#include <cstdint>
#include <span>

#include "causal_switch/channel.hpp"
#include "causal_switch/qmat.hpp"
#include "causal_switch/quantum_switch.hpp"

namespace causal_switch {

// All entropies are in bits.

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// -Σ λ log2 λ. Eigenvalues in [-1e-12, 0) count as 0; anything below
/// -kTolPsd throws std::invalid_argument.
double von_neumann_entropy(const Matrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of the reduced state on the first subsystem of a bipartite pure state.
double entanglement_entropy(const DensityMatrix& phi);

/// Coherent information I(A>B) = H(B) - H(AB) of σ = (id_A ⊗ N)(φ).
///
/// `phi` is a pure state on A ⊗ A' (dims {2, d_in}); A is the reference,
/// A' feeds the channel. For a switched channel B is particle and control
/// together. The raw value is returned, negative values included.
double coherent_information_at(const KrausChannel& channel, const DensityMatrix& phi);
double coherent_information_at(const SwitchedChannel& channel, const DensityMatrix& phi);
/// Same quantity for the pure input |psi> (normalized internally).
double coherent_information_of_vector(const KrausChannel& channel, std::span<const cplx> psi);

/// (|00> + |11>) / sqrt(2) on A ⊗ A'.
DensityMatrix maximally_entangled_qubits();

struct OptimizerSettings {
    int random_starts = 16;
    int max_iterations = 2000;
    double simplex_tolerance = 1e-10;
    std::uint64_t seed = 42;
};

struct CoherentInfoResult {
    double value;
    DensityMatrix optimal_input;  // pure, dims {2, 2}
    int starts_used;
    /// True when the start that produced the optimum met the simplex tolerance.
    bool converged;
};

/// Maximizes the coherent information over pure inputs on A ⊗ A' (qubit A').
///
/// The input is parametrized by 4 complex amplitudes (8 reals), normalized
/// before evaluation. Nelder-Mead runs from the maximally entangled state
/// (start 0) and from `random_starts` Gaussian starts; the best value wins,
/// ties going to the lowest start index.
CoherentInfoResult maximize_coherent_information(const KrausChannel& channel, const OptimizerSettings& settings = {});
CoherentInfoResult maximize_coherent_information(const SwitchedChannel& channel,
                                                 const OptimizerSettings& settings = {});

/// Raw 1 + H2(p^2) - 2 H2(p): coherent information of the p = q flip
/// SWITCH at the maximally entangled input.
double switch_flip_coherent_info_raw(double p);
/// max(0, switch_flip_coherent_info_raw(p)).
double switch_flip_coherent_info_closed(double p);

/// Smallest grid point p = 0.5 + k * grid_step in (0.5, 1] where the
/// switched flips beat a single flip channel, i.e.
/// switch_flip_coherent_info_closed(p) > dephasing_capacity(p).
/// Requires 0 < grid_step <= 0.01; throws std::runtime_error if no crossover exists.
double crossover_p(double grid_step);

}  // namespace causal_switch
