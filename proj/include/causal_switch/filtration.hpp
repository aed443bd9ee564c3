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
#include <cstddef>
#include <vector>

#include "causal_switch/channel.hpp"
#include "causal_switch/qmat.hpp"

// Two-path error filtration. A particle travels through region 0 or 1
// (control qubit |0>, |1>) and picks up a random unitary U0 or U1 there.
// The control starts in |alpha> and is postselected on |beta>, so the
// particle undergoes
//
//   A = alpha_0 conj(beta_0) U0 + alpha_1 conj(beta_1) U1
//
// and the postselected state is ρ' ∝ Σ w(U0, U1) A ρ A^†.

namespace causal_switch {

using Amplitudes = std::array<cplx, 2>;

struct WeightedUnitary {
    Matrix unitary;
    double probability;
};
using UnitaryEnsemble = std::vector<WeightedUnitary>;

/// One joint draw of the two path unitaries.
struct UnitaryPair {
    Matrix u0;
    Matrix u1;
    double probability;
};

class FiltrationSetup {
   public:
    /// U0 and U1 drawn independently from their ensembles.
    static FiltrationSetup independent(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1,
                                       Amplitudes alpha, Amplitudes beta);
    /// U0 and U1 drawn jointly, e.g. the correlated pairs realized by the SWITCH.
    static FiltrationSetup correlated(std::vector<UnitaryPair> pairs, Amplitudes alpha, Amplitudes beta);

    const std::vector<UnitaryPair>& pairs() const { return pairs_; }
    const Amplitudes& alpha() const { return alpha_; }
    const Amplitudes& beta() const { return beta_; }

   private:
    FiltrationSetup(std::vector<UnitaryPair> pairs, Amplitudes alpha, Amplitudes beta);

    std::vector<UnitaryPair> pairs_;
    Amplitudes alpha_;
    Amplitudes beta_;
};

/// Throws std::invalid_argument unless probabilities sum to 1 (1e-10) and
/// every matrix is a 2x2 unitary (1e-9).
void validate_ensemble(const UnitaryEnsemble& ensemble);
std::vector<UnitaryPair> product_pairs(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1);

/// alpha_0 conj(beta_0) U0 + alpha_1 conj(beta_1) U1. Amplitudes must be
/// normalized within 1e-10.
Matrix filtration_operator(const Amplitudes& alpha, const Amplitudes& beta, const Matrix& u0, const Matrix& u1);

struct PostselectedState {
    DensityMatrix state;
    double acceptance;  // probability that the postselection succeeds
};

/// Throws std::domain_error when the acceptance probability is below 1e-14.
PostselectedState postselected_state(const FiltrationSetup& setup, const DensityMatrix& rho);

struct PostselectedChoi {
    ChoiMatrix choi;    // trace-1 Choi of ρ ↦ Σ w A ρ A^†, normalized
    double acceptance;  // acceptance at the maximally mixed input
};

PostselectedChoi postselected_channel_choi(const FiltrationSetup& setup);

/// Largest eigenvalue of a trace-1 qubit Choi matrix, in [1/4, 1]. For a
/// trace-preserving channel it is 1 exactly for unitary conjugations.
double unitarity_score(const ChoiMatrix& c);

/// Kraus operator of the top Choi eigenvector, scaled so that Tr(K^†K) = 2.
Matrix dominant_kraus(const ChoiMatrix& c);
/// True when `k` is proportional to a unitary (K^†K ∝ I within `tol`).
bool proportional_to_unitary(const Matrix& k, double tol = 1e-9);

/// cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>
Amplitudes bloch_state(double theta, double phi);

/// Rank of the matrices viewed as vectors (singular values > 1e-9).
std::size_t linear_rank(const std::vector<Matrix>& ops);

/// Zero-weight entries are ignored when counting distinct values.
struct HypothesisCheck {
    std::size_t distinct0;
    std::size_t distinct1;
    /// Largest rank of {V, W, S, T} over V != W from ensemble 0 and S != T
    /// from ensemble 1 (0 when either side has fewer than two values).
    std::size_t max_independent;
    /// Two distinct values per side with at least three linearly independent.
    bool met;
};

HypothesisCheck check_independence_hypotheses(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1);

struct PostselectionSearch {
    double grid_score;  // best score on the grid
    double best_score;  // after local Nelder-Mead refinement
    /// Bloch angles {θ_α, φ_α, θ_β, φ_β} of the best point.
    std::array<double, 4> angles;
    Amplitudes best_alpha;
    Amplitudes best_beta;
    double acceptance;  // at the best point, maximally mixed input
    /// Dominant Kraus operator at the best point (see dominant_kraus).
    Matrix kraus;
};

/// Maximizes the unitarity score of the postselected channel over
/// |alpha>, |beta> on a product grid θ_k = π k / (n - 1), φ_k = 2π k / n
/// (n = grid_points per angle, at least 8), then refines the best grid
/// point with Nelder-Mead. Grid scores within 1e-12 of each other are
/// ranked by acceptance, then by lexicographic index. Points with zero
/// acceptance are skipped.
PostselectionSearch search_postselection(const std::vector<UnitaryPair>& pairs, std::size_t grid_points);
PostselectionSearch search_postselection(const UnitaryEnsemble& ensemble0, const UnitaryEnsemble& ensemble1,
                                         std::size_t grid_points);

/// Pairs (X^i Z^j, Z^j X^i) with weights (1-p)(1-q), p(1-q), (1-p)q, pq
/// for (i, j) = (0,0), (1,0), (0,1), (1,1).
std::vector<UnitaryPair> switch_correlated_pairs(double p, double q);

struct CorrelatedDemo {
    double score;
    double acceptance;
    Matrix recovered_unitary;  // dominant Kraus operator, Tr(K^†K) = 2
    /// |Tr(Y^† K)| / 2; 1 when K equals Y up to a phase.
    double y_overlap;
    bool unitary;
};

/// Correlated pairs of the SWITCH, control prepared in |+> and postselected
/// on |->. Requires p q > 0.
CorrelatedDemo switch_correlated_demo(double p, double q);

}  // namespace causal_switch
