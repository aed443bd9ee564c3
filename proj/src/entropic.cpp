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

#include "causal_switch/entropic.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

#include "causal_switch/nelder_mead.hpp"
#include "causal_switch/rng.hpp"

namespace causal_switch {

namespace {

constexpr double kEigenvalueClamp = 1e-12;
constexpr double kPurityTolerance = 1e-8;

double entropy_of_spectrum(const std::vector<double>& values) {
    double h = 0;
    for (double lambda : values) {
        if (lambda < -kTolPsd) throw std::invalid_argument("von_neumann_entropy: state has a negative eigenvalue");
        if (lambda <= 0) continue;  // includes the clamped band [-1e-12, 0)
        h -= lambda * std::log2(lambda);
    }
    return h;
}

std::vector<cplx> top_eigenvector(const DensityMatrix& phi) {
    const auto eig = hermitian_eig(phi.mat());
    if (eig.values.front() < 1.0 - kPurityTolerance) {
        throw std::invalid_argument("coherent_information_at: input state is not pure");
    }
    std::vector<cplx> psi(phi.dim());
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = eig.vectors(i, 0);
    return psi;
}

std::vector<cplx> amplitudes_from_reals(std::span<const double> x) {
    const std::size_t n = x.size() / 2;
    std::vector<cplx> psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = {x[i], x[n + i]};
    return psi;
}

}  // namespace

double binary_entropy(double x) {
    require_probability(x, "binary_entropy x");
    double h = 0;
    if (x > 0) h -= x * std::log2(x);
    if (x < 1) h -= (1 - x) * std::log2(1 - x);
    return h;
}

double von_neumann_entropy(const Matrix& rho) { return entropy_of_spectrum(hermitian_eigenvalues(rho)); }

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.mat()); }

double entanglement_entropy(const DensityMatrix& phi) {
    const std::size_t keep[] = {0};
    return von_neumann_entropy(partial_trace(phi.mat(), phi.dims(), keep));
}

double coherent_information_of_vector(const KrausChannel& channel, std::span<const cplx> psi) {
    const std::size_t d_ref = psi.size() / channel.d_in();
    if (d_ref * channel.d_in() != psi.size() || d_ref == 0) {
        throw std::invalid_argument("coherent_information: input dimension does not match the channel");
    }
    double norm2 = 0;
    for (const auto& z : psi) norm2 += std::norm(z);
    if (!(norm2 > 0)) throw std::invalid_argument("coherent_information: zero input vector");
    const double inv_norm = 1.0 / std::sqrt(norm2);

    const std::size_t d_out = channel.d_out();
    const std::size_t n_kraus = channel.kraus().size();
    // v_k = (I_A ⊗ K_k) |psi>, indexed [a * d_out + b].
    std::vector<std::vector<cplx>> v(n_kraus, std::vector<cplx>(d_ref * d_out));
    for (std::size_t k = 0; k < n_kraus; ++k) {
        const Matrix& op = channel.kraus()[k];
        for (std::size_t a = 0; a < d_ref; ++a) {
            for (std::size_t b = 0; b < d_out; ++b) {
                cplx s = 0;
                for (std::size_t i = 0; i < channel.d_in(); ++i) s += op(b, i) * psi[a * channel.d_in() + i];
                v[k][a * d_out + b] = s * inv_norm;
            }
        }
    }

    Matrix rho_b(d_out, d_out);
    for (std::size_t k = 0; k < n_kraus; ++k) {
        for (std::size_t a = 0; a < d_ref; ++a) {
            for (std::size_t b = 0; b < d_out; ++b) {
                for (std::size_t bp = 0; bp < d_out; ++bp) rho_b(b, bp) += v[k][a * d_out + b] * std::conj(v[k][a * d_out + bp]);
            }
        }
    }

    // σ_AB = Σ_k |v_k><v_k| shares its nonzero spectrum with the Gram matrix
    // G_kl = <v_k|v_l>; use whichever is smaller.
    const std::size_t joint_dim = d_ref * d_out;
    Matrix joint;
    if (n_kraus < joint_dim) {
        joint = Matrix(n_kraus, n_kraus);
        for (std::size_t k = 0; k < n_kraus; ++k) {
            for (std::size_t l = 0; l < n_kraus; ++l) {
                cplx s = 0;
                for (std::size_t x = 0; x < joint_dim; ++x) s += std::conj(v[k][x]) * v[l][x];
                joint(k, l) = s;
            }
        }
    } else {
        joint = Matrix(joint_dim, joint_dim);
        for (std::size_t k = 0; k < n_kraus; ++k) {
            for (std::size_t x = 0; x < joint_dim; ++x) {
                for (std::size_t y = 0; y < joint_dim; ++y) joint(x, y) += v[k][x] * std::conj(v[k][y]);
            }
        }
    }
    return von_neumann_entropy(rho_b) - von_neumann_entropy(joint);
}

double coherent_information_at(const KrausChannel& channel, const DensityMatrix& phi) {
    if (phi.dim() != 2 * channel.d_in()) {
        throw std::invalid_argument("coherent_information_at: input must live on A ⊗ A' with A' the channel input");
    }
    return coherent_information_of_vector(channel, top_eigenvector(phi));
}

double coherent_information_at(const SwitchedChannel& channel, const DensityMatrix& phi) {
    return coherent_information_at(channel.as_channel(), phi);
}

DensityMatrix maximally_entangled_qubits() {
    const cplx psi[] = {M_SQRT1_2, 0, 0, M_SQRT1_2};
    return DensityMatrix::pure(psi, {2, 2});
}

CoherentInfoResult maximize_coherent_information(const KrausChannel& channel, const OptimizerSettings& settings) {
    if (channel.d_in() != 2) throw std::invalid_argument("maximize_coherent_information: channel input must be a qubit");
    constexpr std::size_t kParams = 8;

    auto objective = [&channel](std::span<const double> x) {
        const auto psi = amplitudes_from_reals(x);
        double norm2 = 0;
        for (const auto& z : psi) norm2 += std::norm(z);
        if (norm2 < 1e-20) return 1e3;
        return -coherent_information_of_vector(channel, psi);
    };

    std::vector<std::vector<double>> starts;
    starts.push_back({M_SQRT1_2, 0, 0, M_SQRT1_2, 0, 0, 0, 0});
    for (int s = 0; s < settings.random_starts; ++s) {
        auto rng = SplitMix64::substream(settings.seed, static_cast<std::uint64_t>(s));
        std::vector<double> x(kParams);
        for (auto& xi : x) xi = rng.normal();
        double norm = 0;
        for (double xi : x) norm += xi * xi;
        for (auto& xi : x) xi /= std::sqrt(norm);
        starts.push_back(std::move(x));
    }

    NelderMeadOptions nm;
    nm.max_iterations = settings.max_iterations;
    nm.simplex_tolerance = settings.simplex_tolerance;

    std::vector<std::future<NelderMeadResult>> runs;
    for (const auto& x0 : starts) {
        runs.push_back(std::async(std::launch::async, [&objective, x0, nm] { return nelder_mead(objective, x0, nm); }));
    }
    std::vector<NelderMeadResult> results;
    for (auto& r : runs) results.push_back(r.get());

    std::size_t best = 0;
    for (std::size_t s = 1; s < results.size(); ++s) {
        if (results[s].value < results[best].value) best = s;
    }
    const auto psi = amplitudes_from_reals(results[best].x);
    return CoherentInfoResult{-results[best].value, DensityMatrix::pure(psi, {2, 2}), static_cast<int>(starts.size()),
                              results[best].converged};
}

CoherentInfoResult maximize_coherent_information(const SwitchedChannel& channel, const OptimizerSettings& settings) {
    return maximize_coherent_information(channel.as_channel(), settings);
}

double switch_flip_coherent_info_raw(double p) {
    require_probability(p, "p");
    return 1.0 + binary_entropy(p * p) - 2.0 * binary_entropy(p);
}

double switch_flip_coherent_info_closed(double p) { return std::max(0.0, switch_flip_coherent_info_raw(p)); }

double crossover_p(double grid_step) {
    if (!(grid_step > 0 && grid_step <= 0.01)) throw std::invalid_argument("crossover_p: grid_step must lie in (0, 0.01]");
    const auto steps = static_cast<long>(std::floor(0.5 / grid_step + 1e-9));
    for (long k = 1; k <= steps; ++k) {
        const double p = std::min(1.0, 0.5 + static_cast<double>(k) * grid_step);
        if (switch_flip_coherent_info_closed(p) > dephasing_capacity(p)) return p;
    }
    throw std::runtime_error("crossover_p: no crossover found in (0.5, 1]");
}

}  // namespace causal_switch
