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

#include "causal_switch/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "causal_switch/nelder_mead.hpp"

namespace causal_switch {

namespace {

constexpr double kAmplitudeTolerance = 1e-10;
constexpr double kMinAcceptance = 1e-14;
constexpr double kRankTolerance = 1e-9;
constexpr double kDistinctTolerance = 1e-9;

void require_normalized(const Amplitudes& v, const char* name) {
    const double n = std::norm(v[0]) + std::norm(v[1]);
    if (std::abs(n - 1.0) > kAmplitudeTolerance) {
        throw std::invalid_argument(std::string(name) + " is not normalized");
    }
}

void require_unitary(const Matrix& u) {
    if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("ensemble: unitaries must be 2x2");
    if ((adjoint(u) * u - Matrix::identity(2)).max_abs() > 1e-9) {
        throw std::invalid_argument("ensemble: matrix is not unitary");
    }
}

// Unnormalized Choi Σ w vec(A) vec(A)^† / 2 for given amplitude products
// a = alpha_0 conj(beta_0), b = alpha_1 conj(beta_1).
Matrix unnormalized_choi(const std::vector<UnitaryPair>& pairs, cplx a, cplx b) {
    Matrix c(4, 4);
    for (const auto& pair : pairs) {
        std::array<cplx, 4> v;
        for (std::size_t x = 0; x < 4; ++x) v[x] = a * pair.u0.entries()[x] + b * pair.u1.entries()[x];
        const double w = pair.probability / 2;
        for (std::size_t x = 0; x < 4; ++x) {
            for (std::size_t y = 0; y < 4; ++y) c(x, y) += w * v[x] * std::conj(v[y]);
        }
    }
    return c;
}

struct ScoredPoint {
    double score = -1;  // -1 marks zero acceptance
    double acceptance = 0;
};

ScoredPoint score_at(const std::vector<UnitaryPair>& pairs, const std::array<double, 4>& angles) {
    const auto alpha = bloch_state(angles[0], angles[1]);
    const auto beta = bloch_state(angles[2], angles[3]);
    const Matrix c = unnormalized_choi(pairs, alpha[0] * std::conj(beta[0]), alpha[1] * std::conj(beta[1]));
    const double acceptance = c.trace().real();
    if (acceptance < kMinAcceptance) return {};
    return {hermitian_eigenvalues(c).front() / acceptance, acceptance};
}

std::vector<Matrix> distinct(const UnitaryEnsemble& ensemble) {
    std::vector<Matrix> out;
    for (const auto& item : ensemble) {
        if (item.probability <= 0) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Matrix& m) {
            return frobenius_distance(m, item.unitary) <= kDistinctTolerance;
        });
        if (!seen) out.push_back(item.unitary);
    }
    return out;
}

}  // namespace

void validate_ensemble(const UnitaryEnsemble& ensemble) {
    if (ensemble.empty()) throw std::invalid_argument("ensemble: empty");
    double total = 0;
    for (const auto& item : ensemble) {
        require_unitary(item.unitary);
        if (!(item.probability >= 0)) throw std::invalid_argument("ensemble: negative probability");
        total += item.probability;
    }
    if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("ensemble: probabilities do not sum to 1");
}

std::vector<UnitaryPair> product_pairs(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1) {
    std::vector<UnitaryPair> pairs;
    for (const auto& a : ensemble0) {
        for (const auto& b : ensemble1) pairs.push_back({a.unitary, b.unitary, a.probability * b.probability});
    }
    return pairs;
}

FiltrationSetup::FiltrationSetup(std::vector<UnitaryPair> pairs, Amplitudes alpha, Amplitudes beta)
    : pairs_(std::move(pairs)), alpha_(alpha), beta_(beta) {
    require_normalized(alpha_, "alpha");
    require_normalized(beta_, "beta");
}

FiltrationSetup FiltrationSetup::independent(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1,
                                             Amplitudes alpha, Amplitudes beta) {
    validate_ensemble(ensemble0);
    validate_ensemble(ensemble1);
    return FiltrationSetup(product_pairs(ensemble0, ensemble1), alpha, beta);
}

FiltrationSetup FiltrationSetup::correlated(std::vector<UnitaryPair> pairs, Amplitudes alpha, Amplitudes beta) {
    if (pairs.empty()) throw std::invalid_argument("correlated ensemble: empty");
    double total = 0;
    for (const auto& pair : pairs) {
        require_unitary(pair.u0);
        require_unitary(pair.u1);
        if (!(pair.probability >= 0)) throw std::invalid_argument("correlated ensemble: negative probability");
        total += pair.probability;
    }
    if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("correlated ensemble: probabilities do not sum to 1");
    return FiltrationSetup(std::move(pairs), alpha, beta);
}

Matrix filtration_operator(const Amplitudes& alpha, const Amplitudes& beta, const Matrix& u0, const Matrix& u1) {
    require_normalized(alpha, "alpha");
    require_normalized(beta, "beta");
    return alpha[0] * std::conj(beta[0]) * u0 + alpha[1] * std::conj(beta[1]) * u1;
}

PostselectedState postselected_state(const FiltrationSetup& setup, const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("postselected_state: expected a qubit state");
    Matrix out(2, 2);
    for (const auto& pair : setup.pairs()) {
        out += pair.probability * sandwich(filtration_operator(setup.alpha(), setup.beta(), pair.u0, pair.u1), rho.mat());
    }
    const double acceptance = out.trace().real();
    if (acceptance < kMinAcceptance) throw std::domain_error("postselected_state: postselection never succeeds");
    out *= 1.0 / acceptance;
    return {DensityMatrix(std::move(out)), std::min(acceptance, 1.0)};
}

PostselectedChoi postselected_channel_choi(const FiltrationSetup& setup) {
    const auto& a = setup.alpha();
    const auto& b = setup.beta();
    Matrix c = unnormalized_choi(setup.pairs(), a[0] * std::conj(b[0]), a[1] * std::conj(b[1]));
    const double acceptance = c.trace().real();
    if (acceptance < kMinAcceptance) throw std::domain_error("postselected_channel_choi: zero acceptance");
    c *= 1.0 / acceptance;
    return {ChoiMatrix{std::move(c), 2, 2}, std::min(acceptance, 1.0)};
}

double unitarity_score(const ChoiMatrix& c) {
    if (c.d_in != 2 || c.d_out != 2 || c.mat.rows() != 4) throw std::invalid_argument("unitarity_score: expected a qubit Choi");
    if (std::abs(c.mat.trace() - cplx{1.0}) > kTolTrace) throw std::invalid_argument("unitarity_score: Choi trace is not 1");
    const auto values = hermitian_eigenvalues(c.mat);
    if (values.back() < -kTolPsd) throw std::invalid_argument("unitarity_score: Choi is not PSD");
    return values.front();
}

Matrix dominant_kraus(const ChoiMatrix& c) {
    const auto eig = hermitian_eig(c.mat);
    Matrix k(c.d_out, c.d_in);
    const double scale = std::sqrt(static_cast<double>(c.d_in));
    for (std::size_t a = 0; a < c.d_out; ++a) {
        for (std::size_t i = 0; i < c.d_in; ++i) k(a, i) = scale * eig.vectors(a * c.d_in + i, 0);
    }
    return k;
}

bool proportional_to_unitary(const Matrix& k, double tol) {
    if (!k.is_square()) return false;
    const Matrix g = adjoint(k) * k;
    const cplx mean = g.trace() / static_cast<double>(k.rows());
    if (mean.real() <= tol) return false;
    return (g - mean * Matrix::identity(k.rows())).max_abs() <= tol * mean.real();
}

Amplitudes bloch_state(double theta, double phi) {
    return {std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2)};
}

std::size_t linear_rank(const std::vector<Matrix>& ops) {
    if (ops.empty()) return 0;
    // Singular values of the (entries x k) matrix M are the nonnegative
    // eigenvalues of the Hermitian dilation [[0, M], [M^†, 0]].
    const std::size_t rows = ops.front().rows() * ops.front().cols();
    const std::size_t k = ops.size();
    Matrix dilation(rows + k, rows + k);
    for (std::size_t j = 0; j < k; ++j) {
        if (ops[j].entries().size() != rows) throw std::invalid_argument("linear_rank: shape mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            dilation(i, rows + j) = ops[j].entries()[i];
            dilation(rows + j, i) = std::conj(ops[j].entries()[i]);
        }
    }
    const auto values = hermitian_eigenvalues(dilation);
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](double s) { return s > kRankTolerance; }));
}

HypothesisCheck check_independence_hypotheses(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1) {
    const auto d0 = distinct(ensemble0);
    const auto d1 = distinct(ensemble1);
    HypothesisCheck check{d0.size(), d1.size(), 0, false};
    if (d0.size() < 2 || d1.size() < 2) return check;
    for (std::size_t v = 0; v < d0.size(); ++v) {
        for (std::size_t w = v + 1; w < d0.size(); ++w) {
            for (std::size_t s = 0; s < d1.size(); ++s) {
                for (std::size_t t = s + 1; t < d1.size(); ++t) {
                    check.max_independent = std::max(check.max_independent, linear_rank({d0[v], d0[w], d1[s], d1[t]}));
                }
            }
        }
    }
    check.met = check.max_independent >= 3;
    return check;
}

PostselectionSearch search_postselection(const std::vector<UnitaryPair>& pairs, std::size_t grid_points) {
    if (grid_points < 8) throw std::invalid_argument("search_postselection: need at least 8 grid points per angle");
    if (pairs.empty()) throw std::invalid_argument("search_postselection: empty ensemble");
    const std::size_t n = grid_points;
    const double pi = std::numbers::pi;
    auto theta = [&](std::size_t k) { return pi * static_cast<double>(k) / static_cast<double>(n - 1); };
    auto phi = [&](std::size_t k) { return 2 * pi * static_cast<double>(k) / static_cast<double>(n); };

    struct SliceBest {
        double score = -1;
        double acceptance = 0;
        std::array<double, 4> angles{};
        // Scores equal within 1e-12 are ranked by acceptance; exact ties keep
        // the earlier point.
        bool beaten_by(double s, double a) const {
            return s > score + 1e-12 || (s >= score - 1e-12 && a > acceptance);
        }
    };
    // One task per θ_α slice; each scans its slice in lexicographic order
    // and the slices are merged in order.
    std::vector<std::future<SliceBest>> slices;
    for (std::size_t i0 = 0; i0 < n; ++i0) {
        slices.push_back(std::async(std::launch::async, [&, i0] {
            SliceBest best;
            for (std::size_t i1 = 0; i1 < n; ++i1) {
                for (std::size_t i2 = 0; i2 < n; ++i2) {
                    for (std::size_t i3 = 0; i3 < n; ++i3) {
                        const std::array<double, 4> angles{theta(i0), phi(i1), theta(i2), phi(i3)};
                        const auto point = score_at(pairs, angles);
                        if (best.beaten_by(point.score, point.acceptance)) best = {point.score, point.acceptance, angles};
                    }
                }
            }
            return best;
        }));
    }
    SliceBest best;
    for (auto& slice : slices) {
        const auto s = slice.get();
        if (best.beaten_by(s.score, s.acceptance)) best = s;
    }
    if (best.score < 0) throw std::domain_error("search_postselection: postselection never succeeds on the grid");

    NelderMeadOptions nm;
    nm.initial_step = pi / static_cast<double>(n);
    nm.max_iterations = 4000;
    const auto refined = nelder_mead(
        [&](std::span<const double> x) { return -score_at(pairs, {x[0], x[1], x[2], x[3]}).score; },
        std::vector<double>(best.angles.begin(), best.angles.end()), nm);

    std::array<double, 4> angles = best.angles;
    double score = best.score;
    if (-refined.value > score + 1e-12) {
        score = -refined.value;
        std::copy(refined.x.begin(), refined.x.end(), angles.begin());
    }

    const auto alpha = bloch_state(angles[0], angles[1]);
    const auto beta = bloch_state(angles[2], angles[3]);
    const auto choi = postselected_channel_choi(FiltrationSetup::correlated(pairs, alpha, beta));
    return {best.score, score, angles, alpha, beta, choi.acceptance, dominant_kraus(choi.choi)};
}

PostselectionSearch search_postselection(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1,
                                         std::size_t grid_points) {
    validate_ensemble(ensemble0);
    validate_ensemble(ensemble1);
    return search_postselection(product_pairs(ensemble0, ensemble1), grid_points);
}

std::vector<UnitaryPair> switch_correlated_pairs(double p, double q) {
    require_probability(p, "p");
    require_probability(q, "q");
    using namespace pauli;
    std::vector<UnitaryPair> pairs;
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
            const Matrix& xi = i ? X() : I();
            const Matrix& zj = j ? Z() : I();
            const double w = (i ? p : 1 - p) * (j ? q : 1 - q);
            pairs.push_back({xi * zj, zj * xi, w});
        }
    }
    return pairs;
}

CorrelatedDemo switch_correlated_demo(double p, double q) {
    require_probability(p, "p");
    require_probability(q, "q");
    if (!(p * q > 0)) throw std::invalid_argument("switch_correlated_demo: requires p q > 0");
    const auto setup = FiltrationSetup::correlated(switch_correlated_pairs(p, q), bloch_state(std::numbers::pi / 2, 0),
                                                   bloch_state(std::numbers::pi / 2, std::numbers::pi));
    const auto choi = postselected_channel_choi(setup);
    Matrix k = dominant_kraus(choi.choi);
    const double overlap = std::abs((adjoint(pauli::Y()) * k).trace()) / 2;
    const double score = unitarity_score(choi.choi);
    const bool unitary = score > 1 - 1e-10 && proportional_to_unitary(k);
    return {score, choi.acceptance, std::move(k), overlap, unitary};
}

}  // namespace causal_switch
