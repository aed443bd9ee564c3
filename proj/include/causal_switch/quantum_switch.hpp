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
#include <vector>

#include "causal_switch/channel.hpp"
#include "causal_switch/qmat.hpp"

namespace causal_switch {

/// Two qubit channels and the control ("order") qubit state ω.
struct SwitchConfig {
    KrausChannel channel_e;
    KrausChannel channel_f;
    DensityMatrix omega;
};

/// Quantum SWITCH of two qubit channels E and F with control state ω:
///
///   S(ρ) = Σ_ij W_ij (ρ ⊗ ω) W_ij^†,
///   W_ij = E_i F_j ⊗ |0><0| + F_j E_i ⊗ |1><1|.
///
/// The particle is the left tensor factor, the control the right one. The
/// sender only supplies the 2-dim particle state; ω is part of the channel.
class SwitchedChannel {
   public:
    const std::vector<Matrix>& kraus_w() const { return kraus_w_; }
    const SwitchConfig& config() const { return config_; }

    /// The 2 -> 4 map ρ ↦ S(ρ) as a Kraus channel. For ω = Σ_k μ_k |w_k><w_k|
    /// the operators are sqrt(μ_k) W_ij (I ⊗ |w_k>).
    const KrausChannel& as_channel() const { return channel_; }

    /// Linear extension of the map to an arbitrary 2x2 operator.
    Matrix act(const Matrix& op) const;

   private:
    friend SwitchedChannel build_switch(const SwitchConfig& config);
    SwitchedChannel(std::vector<Matrix> kraus_w, SwitchConfig config, KrausChannel channel);

    std::vector<Matrix> kraus_w_;
    SwitchConfig config_;
    KrausChannel channel_;
};

/// Throws std::invalid_argument for non-qubit or non-CPTP channels, or a
/// non-qubit ω.
SwitchedChannel build_switch(const SwitchConfig& config);

/// Joint particle ⊗ control output state, dims {2, 2}.
DensityMatrix apply_switch(const SwitchedChannel& sc, const DensityMatrix& rho);

/// 8x8 trace-1 Choi of the 2 -> 4 map (subsystems: particle, control, reference).
ChoiMatrix switched_choi(const SwitchedChannel& sc);

/// blocks[k][k'] is the (unnormalized) particle operator multiplying
/// |k><k'| on the control in the joint output.
using ControlBlocks = std::array<std::array<Matrix, 2>, 2>;
ControlBlocks control_blocks(const SwitchedChannel& sc, const DensityMatrix& rho);
ControlBlocks control_blocks(const Matrix& joint);

/// Closed-form output of the SWITCH of bit_flip(p) and phase_flip(q) with ω = |+><+|:
///   [(1-p)(1-q) ρ + p(1-q) XρX + q(1-p) ZρZ] ⊗ |+><+| + pq YρY ⊗ |-><-|.
DensityMatrix pauli_switch_closed_form(double p, double q, const DensityMatrix& rho);

/// SWITCH of bit_flip(p) and phase_flip(q) with the control in |+>.
SwitchedChannel flip_switch(double p, double q);

}  // namespace causal_switch
