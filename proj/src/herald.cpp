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

#include "causal_switch/herald.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "causal_switch/channel.hpp"
#include "causal_switch/quantum_switch.hpp"
#include "causal_switch/rng.hpp"

namespace causal_switch {

namespace {

// Tr_control[(I ⊗ |v><v|) joint] as an unnormalized particle operator.
Matrix project_control(const Matrix& joint, const Matrix& v) {
    Matrix out(2, 2);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            cplx s = 0;
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t kp = 0; kp < 2; ++kp) s += std::conj(v(k, 0)) * joint(a * 2 + k, b * 2 + kp) * v(kp, 0);
            }
            out(a, b) = s;
        }
    }
    return out;
}

std::optional<DensityMatrix> normalized(Matrix m, double prob) {
    if (prob < kZeroProbability) return std::nullopt;
    m *= 1.0 / prob;
    return DensityMatrix(std::move(m));
}

}  // namespace

HeraldOutcome herald_measure(const DensityMatrix& joint) {
    if (joint.dim() != 4) throw std::invalid_argument("herald_measure: expected a particle ⊗ control state");
    Matrix plus = project_control(joint.mat(), basis::plus());
    Matrix minus = project_control(joint.mat(), basis::minus());
    const double pp = std::clamp(plus.trace().real(), 0.0, 1.0);
    const double pm = std::clamp(minus.trace().real(), 0.0, 1.0);
    return {pp, pm, normalized(std::move(plus), pp), normalized(std::move(minus), pm)};
}

DensityMatrix correct_minus(const DensityMatrix& state_minus) {
    if (state_minus.dim() != 2) throw std::invalid_argument("correct_minus: expected a qubit state");
    return DensityMatrix(sandwich(pauli::Y(), state_minus.mat()));
}

double heralded_success_probability(double p, double q) {
    require_probability(p, "p");
    require_probability(q, "q");
    return p * q;
}

double pure_state_fidelity(std::span<const cplx> psi, const DensityMatrix& rho) {
    if (psi.size() != rho.dim()) throw std::invalid_argument("pure_state_fidelity: dimension mismatch");
    cplx f = 0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) f += std::conj(psi[i]) * rho.mat()(i, j) * psi[j];
    }
    return f.real();
}

std::vector<QubitState> bb84_states() {
    return {QubitState{1, 0}, QubitState{0, 1}, QubitState{M_SQRT1_2, M_SQRT1_2}, QubitState{M_SQRT1_2, -M_SQRT1_2}};
}

HeraldStatistics monte_carlo_herald(double p, double q, std::uint64_t n_trials, std::uint64_t seed,
                                    std::span<const QubitState> input_states) {
    require_probability(p, "p");
    require_probability(q, "q");
    if (n_trials < 1) throw std::invalid_argument("monte_carlo_herald: n_trials must be at least 1");
    if (input_states.empty()) throw std::invalid_argument("monte_carlo_herald: empty input state list");

    std::vector<QubitState> inputs;
    std::vector<DensityMatrix> rhos;
    for (const auto& s : input_states) {
        const double n = std::sqrt(std::norm(s[0]) + std::norm(s[1]));
        if (!(n > 0)) throw std::invalid_argument("monte_carlo_herald: zero input state");
        inputs.push_back({s[0] / n, s[1] / n});
        rhos.push_back(DensityMatrix::pure(inputs.back()));
    }

    HeraldStatistics stats;
    stats.trials = n_trials;
    stats.analytic_probability = p * q;
    stats.key_rate_factor = p * q;
    stats.per_input.resize(inputs.size());
    stats.min_fidelity = 1.0;
    std::vector<double> fidelity_sum(inputs.size(), 0.0);

    for (std::uint64_t t = 0; t < n_trials; ++t) {
        auto rng = SplitMix64::substream(seed, t);
        const auto which = static_cast<std::size_t>(rng.below(inputs.size()));
        const double u = rng.uniform();

        const auto outcome = herald_measure(pauli_switch_closed_form(p, q, rhos[which]));
        auto& record = stats.per_input[which];
        ++record.trials;
        if (u >= outcome.prob_minus || !outcome.state_minus) continue;

        const double fidelity = pure_state_fidelity(inputs[which], correct_minus(*outcome.state_minus));
        ++record.successes;
        ++stats.successes;
        fidelity_sum[which] += fidelity;
        stats.min_fidelity = std::min(stats.min_fidelity, fidelity);
    }

    double total_fidelity = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto& record = stats.per_input[i];
        if (record.successes > 0) record.mean_fidelity = fidelity_sum[i] / static_cast<double>(record.successes);
        total_fidelity += fidelity_sum[i];
    }
    const double n = static_cast<double>(n_trials);
    stats.success_frequency = static_cast<double>(stats.successes) / n;
    stats.standard_error = std::sqrt(stats.success_frequency * (1 - stats.success_frequency) / n);
    if (stats.successes > 0) {
        stats.mean_fidelity = total_fidelity / static_cast<double>(stats.successes);
    } else {
        stats.min_fidelity = 0;
    }
    return stats;
}

}  // namespace causal_switch
