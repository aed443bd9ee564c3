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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails. Each criterion also has a wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "causal_switch/channel.hpp"
#include "causal_switch/entropic.hpp"
#include "causal_switch/filtration.hpp"
#include "causal_switch/herald.hpp"
#include "causal_switch/quantum_switch.hpp"
#include "test_util.hpp"

using namespace causal_switch;
using namespace causal_switch::testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

double grid_value(int k) { return k / 9.0; }  // 10 points on [0, 1]

Outcome heralded_probability() {
    SplitMix64 rng(1001);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double p = grid_value(i);
            const double q = grid_value(j);
            const auto outcome = herald_measure(apply_switch(flip_switch(p, q), random_density(rng, 2)));
            worst = std::max(worst, std::abs(outcome.prob_minus - p * q));
        }
    }
    const auto half = herald_measure(apply_switch(flip_switch(0.5, 0.5), DensityMatrix::maximally_mixed(2)));
    const bool pass = worst < 1e-12 && std::abs(half.prob_minus - 0.25) < 1e-12;
    return {pass, fmt("max |P(-) - pq| = %.3g, P(-) at 1/2,1/2 = %.15g", worst, half.prob_minus)};
}

Outcome noiseless_correction() {
    SplitMix64 rng(1002);
    double worst = 0;
    bool all_heralded = true;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            // The minus branch only exists for pq > 0; shift the grid off zero.
            const double p = 0.1 + 0.1 * i;
            const double q = 0.1 + 0.1 * j;
            const auto sc = flip_switch(p, q);
            for (int t = 0; t < 20; ++t) {
                const auto psi = random_vector(rng, 2);
                const auto outcome = herald_measure(apply_switch(sc, DensityMatrix::pure(psi)));
                if (!outcome.state_minus) {
                    all_heralded = false;
                    continue;
                }
                worst = std::max(worst, std::abs(1 - pure_state_fidelity(psi, correct_minus(*outcome.state_minus))));
            }
        }
    }
    return {all_heralded && worst < 1e-10, fmt("max |1 - F| = %.3g over 2000 inputs", worst)};
}

Outcome closed_form_equivalence() {
    SplitMix64 rng(1003);
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double p = grid_value(i);
            const double q = grid_value(j);
            const auto sc = flip_switch(p, q);
            for (int t = 0; t < 20; ++t) {
                const auto rho = DensityMatrix::pure(random_vector(rng, 2));
                worst = std::max(worst, frobenius_distance(apply_switch(sc, rho).mat(),
                                                           pauli_switch_closed_form(p, q, rho).mat()));
            }
        }
    }
    return {worst < 1e-12, fmt("max Frobenius distance = %.3g", worst)};
}

Outcome optimizer_matches_closed_form() {
    double worst_value = 0;
    double worst_entropy = 0;
    for (int k = 0; k < 8; ++k) {
        const double p = 0.65 + 0.05 * k;
        const auto result = maximize_coherent_information(flip_switch(p, p));
        const double expected = 1 + binary_entropy(p * p) - 2 * binary_entropy(p);
        worst_value = std::max(worst_value, std::abs(result.value - expected));
        worst_entropy = std::max(worst_entropy, std::abs(entanglement_entropy(result.optimal_input) - 1));
    }
    return {worst_value < 1e-4 && worst_entropy < 1e-3,
            fmt("max |Q1 - closed form| = %.3g, max |S(A) - 1| = %.3g", worst_value, worst_entropy)};
}

Outcome crossover() {
    const double p = crossover_p(0.005);
    return {p >= 0.61 && p <= 0.63, fmt("first grid p with advantage = %.6g", p)};
}

Outcome bottleneck() {
    const auto phi = maximally_entangled_qubits();
    double worst_excess = -1;
    double min_margin = 1;
    double endpoint_gap = 0;
    for (int k = 0; k <= 100; ++k) {
        const double p = 0.5 + 0.005 * k;
        const double single = 1 - binary_entropy(p);
        const double sequential = coherent_information_at(compose(bit_flip(p), phase_flip(p)), phi);
        worst_excess = std::max(worst_excess, sequential - single);
        if (p < 0.63 - 1e-12) continue;
        const double switched = coherent_information_at(flip_switch(p, p), phi);
        if (k == 100) {
            // At p = 1 both flips are unitary and every quantity equals 1.
            endpoint_gap = std::max({std::abs(switched - 1), std::abs(single - 1), std::abs(sequential - 1)});
        } else {
            min_margin = std::min(min_margin, switched - std::max(single, sequential));
        }
    }
    return {worst_excess <= 1e-9 && min_margin > 0 && endpoint_gap < 1e-12,
            fmt("max (sequential - (1 - H2)) = %.3g, min switched margin on [0.63, 1) = %.3g, |value - 1| at p = 1: %.3g",
                worst_excess, min_margin, endpoint_gap)};
}

Outcome kraus_independence() {
    SplitMix64 rng(1007);
    double worst = 0;
    const cplx plus[] = {M_SQRT1_2, M_SQRT1_2};
    for (int t = 0; t < 50; ++t) {
        const auto e = random_qubit_channel(rng, 1 + rng.below(4));
        const auto f = random_qubit_channel(rng, 1 + rng.below(4));
        const auto omega = (t % 2) ? DensityMatrix::pure(plus) : random_density(rng, 2);
        const auto reference = switched_choi(build_switch({e, f, omega}));
        const auto extra = rng.below(3);
        const bool remix_e = t % 3 != 1;
        const bool remix_f = t % 3 != 0;
        const auto e2 =
            remix_e ? remix(e, random_isometry(rng, e.kraus().size() + extra, e.kraus().size())) : e;
        const auto f2 =
            remix_f ? remix(f, random_isometry(rng, f.kraus().size() + extra, f.kraus().size())) : f;
        worst = std::max(worst, choi_distance(reference, switched_choi(build_switch({e2, f2, omega}))));
    }
    return {worst < 1e-10, fmt("max switched-Choi distance over 50 remixings = %.3g", worst)};
}

Outcome monte_carlo() {
    const auto states = bb84_states();
    const auto stats = monte_carlo_herald(0.5, 0.5, 100000, 42, states);
    const double sigma = std::sqrt(0.25 * 0.75 / 1e5);
    const double deviation = std::abs(stats.success_frequency - 0.25);
    const bool pass = deviation <= 3 * sigma && stats.successes > 0 && stats.min_fidelity >= 1 - 1e-9;
    return {pass, fmt("frequency = %.6g (%.3g sigma), min fidelity = %.15g", stats.success_frequency,
                      deviation / sigma, stats.min_fidelity)};
}

Outcome filtration_certificate() {
    using namespace pauli;
    const UnitaryEnsemble e0 = {{I(), 0.5}, {X(), 0.5}};
    const UnitaryEnsemble e1 = {{I(), 0.5}, {Z(), 0.5}};
    const auto check = check_independence_hypotheses(e0, e1);
    const auto search = search_postselection(e0, e1, 32);
    const auto demo = switch_correlated_demo(0.5, 0.5);
    const bool pass = check.met && check.max_independent == 3 && search.best_score <= 0.99 &&
                      std::abs(demo.score - 1) < 1e-10 && std::abs(demo.acceptance - 0.25) < 1e-12 && demo.unitary;
    return {pass, fmt("independent best score = %.6g, correlated score = %.15g, acceptance = %.15g",
                      search.best_score, demo.score, demo.acceptance)};
}

// Index-formula oracles.
Matrix oracle_tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// Trace out the right factor of a (da x db) bipartite operator, or the left one.
Matrix oracle_partial_trace(const Matrix& m, std::size_t da, std::size_t db, bool keep_left) {
    Matrix out = keep_left ? Matrix(da, da) : Matrix(db, db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    if (keep_left && k == l) out(i, j) += m(i * db + k, j * db + l);
                    if (!keep_left && i == j) out(k, l) += m(i * db + k, j * db + l);
                }
    return out;
}

Outcome linear_algebra_oracles() {
    SplitMix64 rng(1010);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.below(6);
        const std::size_t k = 1 + rng.below(6);
        const std::size_t m = 1 + rng.below(6);
        const Matrix a = random_matrix(rng, n, k);
        const Matrix b = random_matrix(rng, k, m);
        worst = std::max(worst, max_entry_diff(matmul(a, b), naive_matmul(a, b)));

        const Matrix c = random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4));
        const Matrix d = random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4));
        worst = std::max(worst, max_entry_diff(tensor(c, d), oracle_tensor(c, d)));

        const std::size_t da = 1 + rng.below(4);
        const std::size_t db = 1 + rng.below(4);
        const Matrix joint = random_matrix(rng, da * db, da * db);
        const std::size_t dims[] = {da, db};
        const std::size_t left[] = {0};
        const std::size_t right[] = {1};
        worst = std::max(worst, max_entry_diff(partial_trace(joint, dims, left), oracle_partial_trace(joint, da, db, true)));
        worst = std::max(worst, max_entry_diff(partial_trace(joint, dims, right), oracle_partial_trace(joint, da, db, false)));

        // Eigendecomposition: residual A v = λ v, orthonormal vectors, and the
        // power sums Tr A and Tr A^2 computed entrywise.
        const std::size_t h = 1 + rng.below(16);
        const Matrix herm = random_hermitian(rng, h);
        const auto eig = hermitian_eig(herm);
        const Matrix av = naive_matmul(herm, eig.vectors);
        double trace = 0;
        double trace_sq = 0;
        for (std::size_t col = 0; col < h; ++col) {
            for (std::size_t row = 0; row < h; ++row) {
                worst = std::max(worst, std::abs(av(row, col) - eig.values[col] * eig.vectors(row, col)));
            }
            trace += herm(col, col).real();
            for (std::size_t row = 0; row < h; ++row) trace_sq += std::norm(herm(row, col));
        }
        worst = std::max(worst, max_entry_diff(naive_matmul(naive_adjoint(eig.vectors), eig.vectors), Matrix::identity(h)));
        double sum = 0;
        double sum_sq = 0;
        for (double v : eig.values) {
            sum += v;
            sum_sq += v * v;
        }
        worst = std::max({worst, std::abs(sum - trace) / h, std::abs(sum_sq - trace_sq) / (h * h)});
        for (std::size_t i = 1; i < h; ++i) {
            if (eig.values[i] > eig.values[i - 1]) worst = std::max(worst, 1.0);  // must be descending
        }
    }
    return {worst < 1e-10, fmt("max deviation over 100 instances per operation = %.3g", worst)};
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "heralded success probability equals pq", 1, heralded_probability},
        {2, "Y-corrected minus branch reproduces the input", 5, noiseless_correction},
        {3, "closed-form Pauli SWITCH equals the general construction", 5, closed_form_equivalence},
        {4, "optimized coherent information matches the closed form", 120, optimizer_matches_closed_form},
        {5, "advantage crossover in [0.61, 0.63]", 1, crossover},
        {6, "switched flips beat the sequential bottleneck below p = 1", 30, bottleneck},
        {7, "switched Choi is independent of the Kraus representation", 10, kraus_independence},
        {8, "Monte Carlo heralding at p = q = 1/2", 30, monte_carlo},
        {9, "filtration certificate and correlated counterexample", 120, filtration_certificate},
        {10, "linear-algebra kernels match index-formula oracles", 10, linear_algebra_oracles},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds < c.budget_seconds;
        const bool pass = outcome.pass && in_budget;
        if (!pass) ++failures;
        std::printf("[%s] criterion %d: %s; %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    outcome.detail.c_str(), seconds, c.budget_seconds, in_budget ? "" : " over budget");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
