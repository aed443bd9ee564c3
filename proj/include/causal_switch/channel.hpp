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

#include <cstddef>
#include <vector>

#include "causal_switch/qmat.hpp"

namespace causal_switch {

inline constexpr double kTolCptp = 1e-9;
/// Choi eigenvalues at or below this are dropped when extracting Kraus operators.
inline constexpr double kKrausPruneThreshold = 1e-10;
/// Two channels are equal when their Choi matrices are this close (Frobenius).
inline constexpr double kChannelEqualityTolerance = 1e-9;

/// A channel given by Kraus operators K_i (each d_out x d_in).
///
/// Construction only checks shapes; use validate_cptp() for trace
/// preservation. The named factories below always produce valid channels.
class KrausChannel {
   public:
    KrausChannel(std::vector<Matrix> kraus, std::size_t d_in, std::size_t d_out);
    /// Shapes inferred from the first operator.
    explicit KrausChannel(std::vector<Matrix> kraus);

    const std::vector<Matrix>& kraus() const { return kraus_; }
    std::size_t d_in() const { return d_in_; }
    std::size_t d_out() const { return d_out_; }

   private:
    std::vector<Matrix> kraus_;
    std::size_t d_in_;
    std::size_t d_out_;
};

/// Trace-1 Choi operator (N ⊗ id)(|Φ><Φ|), |Φ> = Σ_i |i>|i> / sqrt(d_in).
/// The output factor is on the left: subsystem dims are {d_out, d_in}.
struct ChoiMatrix {
    Matrix mat;
    std::size_t d_in;
    std::size_t d_out;

    std::vector<std::size_t> dims() const { return {d_out, d_in}; }
};

struct CptpReport {
    bool valid;
    /// Largest entry of |Σ K^†K - I|.
    double max_violation;
};

CptpReport validate_cptp(const KrausChannel& c);

/// Σ_i K_i rho K_i^†. Throws std::invalid_argument when rho.dim() != d_in.
DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho);
/// Same action on an arbitrary (not necessarily positive) operator.
Matrix apply(const KrausChannel& c, const Matrix& op);

/// second ∘ first, Kraus list {K_i L_j}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

ChoiMatrix kraus_to_choi(const KrausChannel& c);
/// Kraus operators from the Choi spectrum; throws for non-PSD input.
KrausChannel choi_to_kraus(const ChoiMatrix& c);
/// N(op) = d_in Tr_in[C (I ⊗ op^T)].
Matrix apply_choi(const ChoiMatrix& c, const Matrix& op);

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);
bool same_channel(const KrausChannel& a, const KrausChannel& b);

/// K'_a = Σ_i u[a, i] K_i for an isometry u (rows >= number of Kraus operators).
KrausChannel remix(const KrausChannel& c, const Matrix& isometry);
/// Channel V N(V^† · V) V^†, i.e. N conjugated by the unitary V on both sides.
KrausChannel conjugated(const KrausChannel& c, const Matrix& v);

KrausChannel identity_channel(std::size_t dim = 2);
KrausChannel unitary_channel(const Matrix& u);
/// rho -> (1-p) rho + p X rho X
KrausChannel bit_flip(double p);
/// rho -> (1-q) rho + q Z rho Z
KrausChannel phase_flip(double q);
/// rho -> (1 - 3p/4) rho + (p/4)(X rho X + Y rho Y + Z rho Z); p = 1 is completely depolarizing.
KrausChannel depolarizing(double p);

/// Quantum capacity 1 - H2(p) of the bit-flip / phase-flip channel with flip probability p.
double dephasing_capacity(double p);

/// Throws std::invalid_argument unless 0 <= p <= 1.
void require_probability(double p, const char* name);

}  // namespace causal_switch
