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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace causal_switch;
using namespace causal_switch::testing;

namespace {

const Amplitudes kPlus = {M_SQRT1_2, M_SQRT1_2};
const Amplitudes kMinus = {M_SQRT1_2, -M_SQRT1_2};

UnitaryEnsemble flips(const Matrix& u, double p) { return {{pauli::I(), 1 - p}, {u, p}}; }

UnitaryEnsemble all_paulis() {
    using namespace pauli;
    return {{I(), 0.25}, {X(), 0.25}, {Y(), 0.25}, {Z(), 0.25}};
}

// Controlled-unitary circuit: W = U0⊗|0><0| + U1⊗|1><1| on ρ⊗|α><α|, then
// <β| on the control, averaged over the pair weights. Unnormalized.
Matrix controlled_circuit(const std::vector<UnitaryPair>& pairs, const Amplitudes& alpha, const Amplitudes& beta,
                          const Matrix& rho) {
    const Matrix a = Matrix::column(alpha);
    const Matrix joint_in = tensor(rho, a * adjoint(a));
    Matrix out = Matrix::zeros(2, 2);
    for (const auto& pair : pairs) {
        const Matrix w = tensor(pair.u0, basis::ketbra(0, 0)) + tensor(pair.u1, basis::ketbra(1, 1));
        const Matrix joint = sandwich(w, joint_in);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                cplx sum = 0;
                for (std::size_t k = 0; k < 2; ++k) {
                    for (std::size_t kp = 0; kp < 2; ++kp) {
                        sum += std::conj(beta[k]) * joint(r * 2 + k, c * 2 + kp) * beta[kp];
                    }
                }
                out(r, c) += pair.probability * sum;
            }
        }
    }
    return out;
}

}  // namespace

TEST(filtration, operator_examples) {
    using namespace pauli;
    EXPECT_LT(max_entry_diff(filtration_operator(kPlus, kPlus, X(), X()), X()), 1e-15);
    EXPECT_LT(max_entry_diff(filtration_operator(kPlus, kMinus, X(), X()), Matrix::zeros(2, 2)), 1e-15);
    // (I + Z)/2 = |0><0|
    EXPECT_LT(max_entry_diff(filtration_operator(kPlus, kPlus, I(), Z()), basis::ketbra(0, 0)), 1e-15);
    const Amplitudes zero = {1, 0};
    EXPECT_LT(max_entry_diff(filtration_operator(zero, zero, Y(), X()), Y()), 1e-15);
}

TEST(filtration, setup_validation) {
    EXPECT_THROW(FiltrationSetup::independent(flips(pauli::X(), 0.3), {{pauli::I(), 0.5}}, kPlus, kPlus),
                 std::invalid_argument);
    EXPECT_THROW(FiltrationSetup::independent(flips(pauli::X(), 0.3), flips(pauli::Z(), 0.3), {1, 1}, kPlus),
                 std::invalid_argument);
    EXPECT_THROW(validate_ensemble({{Matrix{{1, 1}, {0, 1}}, 1.0}}), std::invalid_argument);
    EXPECT_THROW(validate_ensemble({}), std::invalid_argument);
}

TEST(filtration, singleton_ensembles_pass_through) {
    SplitMix64 rng(71);
    const Matrix u = random_unitary(rng, 2);
    const auto setup = FiltrationSetup::independent({{u, 1.0}}, {{u, 1.0}}, kPlus, kPlus);
    const auto rho = random_density(rng, 2);
    const auto out = postselected_state(setup, rho);
    EXPECT_NEAR(out.acceptance, 1.0, 1e-12);
    EXPECT_LT(max_entry_diff(out.state.mat(), sandwich(u, rho.mat())), 1e-12);
}

TEST(filtration, independent_paulis_leave_mixed_output) {
    const auto setup = FiltrationSetup::independent(all_paulis(), all_paulis(), kPlus, kPlus);
    const cplx zero[] = {1, 0};
    const auto out = postselected_state(setup, DensityMatrix::pure(zero));
    EXPECT_LT(hermitian_eigenvalues(out.state.mat()).front(), 1 - 1e-3);
    EXPECT_GT(out.acceptance, 0.0);
    EXPECT_LE(out.acceptance, 1.0);
}

TEST(filtration, correlated_switch_pairs_give_y_conjugation) {
    SplitMix64 rng(72);
    const auto setup = FiltrationSetup::correlated(switch_correlated_pairs(0.5, 0.5), kPlus, kMinus);
    for (int trial = 0; trial < 5; ++trial) {
        const auto rho = random_density(rng, 2);
        const auto out = postselected_state(setup, rho);
        EXPECT_NEAR(out.acceptance, 0.25, 1e-12);
        EXPECT_LT(max_entry_diff(out.state.mat(), sandwich(pauli::Y(), rho.mat())), 1e-12);
    }
}

TEST(filtration, matches_controlled_unitary_circuit) {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n0 = 1 + rng.below(3);
        const std::size_t n1 = 1 + rng.below(3);
        UnitaryEnsemble e0, e1;
        for (std::size_t k = 0; k < n0; ++k) e0.push_back({random_unitary(rng, 2), 1.0 / n0});
        for (std::size_t k = 0; k < n1; ++k) e1.push_back({random_unitary(rng, 2), 1.0 / n1});
        const auto a = random_vector(rng, 2);
        const auto b = random_vector(rng, 2);
        const Amplitudes alpha = {a[0], a[1]};
        const Amplitudes beta = {b[0], b[1]};
        const auto rho = random_density(rng, 2);

        const Matrix expected = controlled_circuit(product_pairs(e0, e1), alpha, beta, rho.mat());
        const auto out = postselected_state(FiltrationSetup::independent(e0, e1, alpha, beta), rho);
        EXPECT_NEAR(out.acceptance, expected.trace().real(), 1e-12);
        EXPECT_LT(max_entry_diff(out.acceptance * out.state.mat(), expected), 1e-12);
    }
}

TEST(filtration, zero_acceptance_throws) {
    const auto setup =
        FiltrationSetup::independent({{pauli::X(), 1.0}}, {{pauli::X(), 1.0}}, kPlus, kMinus);
    EXPECT_THROW(postselected_state(setup, DensityMatrix::maximally_mixed(2)), std::domain_error);
    EXPECT_THROW(postselected_channel_choi(setup), std::domain_error);
}

TEST(filtration, choi_examples) {
    using namespace pauli;
    const auto id = postselected_channel_choi(FiltrationSetup::independent({{I(), 1.0}}, {{I(), 1.0}}, kPlus, kPlus));
    EXPECT_LT(choi_distance(id.choi, kraus_to_choi(identity_channel())), 1e-12);
    EXPECT_NEAR(id.acceptance, 1.0, 1e-12);
    const auto corr = postselected_channel_choi(FiltrationSetup::correlated(switch_correlated_pairs(0.5, 0.5), kPlus, kMinus));
    EXPECT_LT(choi_distance(corr.choi, kraus_to_choi(unitary_channel(Y()))), 1e-12);
    EXPECT_NEAR(corr.acceptance, 0.25, 1e-12);
}

TEST(filtration, unitarity_score_examples) {
    EXPECT_NEAR(unitarity_score(kraus_to_choi(unitary_channel(pauli::Y()))), 1.0, 1e-12);
    EXPECT_NEAR(unitarity_score(kraus_to_choi(depolarizing(1.0))), 0.25, 1e-12);
    for (double q : {0.1, 0.3, 0.5, 0.8}) {
        EXPECT_NEAR(unitarity_score(kraus_to_choi(phase_flip(q))), std::max(1 - q, q), 1e-12);
    }
    EXPECT_THROW(unitarity_score(ChoiMatrix{Matrix::identity(4), 2, 2}), std::invalid_argument);
}

TEST(filtration, unitary_detection) {
    SplitMix64 rng(74);
    const Matrix u = random_unitary(rng, 2);
    const Matrix k = dominant_kraus(kraus_to_choi(unitary_channel(u)));
    EXPECT_TRUE(proportional_to_unitary(k));
    EXPECT_NEAR(std::abs((adjoint(u) * k).trace()) / 2, 1.0, 1e-10);
    EXPECT_FALSE(proportional_to_unitary(basis::ketbra(0, 0)));
    EXPECT_TRUE(proportional_to_unitary(cplx(0, 3) * pauli::X()));
}

TEST(filtration, bloch_states) {
    const auto zero = bloch_state(0, 0);
    EXPECT_NEAR(std::abs(zero[0] - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(zero[1]), 0, 1e-15);
    const auto minus = bloch_state(std::numbers::pi / 2, std::numbers::pi);
    EXPECT_NEAR(std::abs(minus[0] - kMinus[0]), 0, 1e-15);
    EXPECT_NEAR(std::abs(minus[1] - kMinus[1]), 0, 1e-15);
}

TEST(filtration, linear_rank) {
    using namespace pauli;
    EXPECT_EQ(linear_rank({I(), X(), Y(), Z()}), 4u);
    EXPECT_EQ(linear_rank({I(), X(), I() + X()}), 2u);
    EXPECT_EQ(linear_rank({X(), cplx(0, 1) * X()}), 1u);
    EXPECT_EQ(linear_rank({Matrix::zeros(2, 2)}), 0u);
}

TEST(filtration, hypothesis_check) {
    using namespace pauli;
    const auto ix_iz = check_independence_hypotheses(flips(X(), 0.5), flips(Z(), 0.5));
    EXPECT_TRUE(ix_iz.met);
    EXPECT_EQ(ix_iz.max_independent, 3u);
    const auto paulis = check_independence_hypotheses(all_paulis(), all_paulis());
    EXPECT_TRUE(paulis.met);
    EXPECT_EQ(paulis.max_independent, 4u);
    const auto same = check_independence_hypotheses(flips(X(), 0.5), flips(X(), 0.5));
    EXPECT_FALSE(same.met);
    EXPECT_EQ(same.max_independent, 2u);
    const auto singleton = check_independence_hypotheses({{Y(), 1.0}}, {{Y(), 1.0}});
    EXPECT_FALSE(singleton.met);
    EXPECT_EQ(singleton.distinct0, 1u);
}

TEST(filtration, search_cannot_certify_independent_flips) {
    using namespace pauli;
    const auto s = search_postselection(flips(X(), 0.5), flips(Z(), 0.5), 32);
    EXPECT_LT(s.best_score, 0.99);
    EXPECT_GE(s.best_score, s.grid_score - 1e-12);
    EXPECT_GT(s.acceptance, 0.0);
}

TEST(filtration, search_cannot_certify_pauli_twirl) {
    const auto s = search_postselection(all_paulis(), all_paulis(), 16);
    EXPECT_LT(s.best_score, 0.99);
}

TEST(filtration, search_finds_singleton_unitary) {
    SplitMix64 rng(75);
    const Matrix u = random_unitary(rng, 2);
    const auto s = search_postselection({{u, 1.0}}, {{u, 1.0}}, 16);
    EXPECT_NEAR(s.best_score, 1.0, 1e-9);
    EXPECT_TRUE(proportional_to_unitary(s.kraus));
}

TEST(filtration, search_rejects_coarse_grid) {
    EXPECT_THROW(search_postselection(all_paulis(), all_paulis(), 4), std::invalid_argument);
}

TEST(filtration, correlated_demo) {
    const auto half = switch_correlated_demo(0.5, 0.5);
    EXPECT_NEAR(half.score, 1.0, 1e-12);
    EXPECT_NEAR(half.acceptance, 0.25, 1e-12);
    EXPECT_NEAR(half.y_overlap, 1.0, 1e-10);
    EXPECT_TRUE(half.unitary);

    EXPECT_NEAR(switch_correlated_demo(1, 1).acceptance, 1.0, 1e-12);
    const auto skewed = switch_correlated_demo(0.3, 0.7);
    EXPECT_NEAR(skewed.acceptance, 0.21, 1e-12);
    EXPECT_NEAR(skewed.y_overlap, 1.0, 1e-10);
    EXPECT_TRUE(skewed.unitary);

    EXPECT_THROW(switch_correlated_demo(0, 0.5), std::invalid_argument);
}
