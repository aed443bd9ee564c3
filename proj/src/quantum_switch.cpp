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

#include "causal_switch/quantum_switch.hpp"

#include <cmath>
#include <stdexcept>

namespace causal_switch {

namespace {

KrausChannel switch_as_channel(const std::vector<Matrix>& kraus_w, const DensityMatrix& omega) {
    const auto eig = hermitian_eig(omega.mat());
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < 2; ++k) {
        if (eig.values[k] <= kKrausPruneThreshold) continue;
        Matrix embed(2, 1);  // sqrt(mu_k) |w_k>
        for (std::size_t i = 0; i < 2; ++i) embed(i, 0) = std::sqrt(eig.values[k]) * eig.vectors(i, k);
        const Matrix lift = tensor(pauli::I(), embed);  // 4x2: ρ -> ρ ⊗ |w_k>
        for (const auto& w : kraus_w) ops.push_back(w * lift);
    }
    return KrausChannel(std::move(ops), 2, 4);
}

}  // namespace

SwitchedChannel::SwitchedChannel(std::vector<Matrix> kraus_w, SwitchConfig config, KrausChannel channel)
    : kraus_w_(std::move(kraus_w)), config_(std::move(config)), channel_(std::move(channel)) {}

Matrix SwitchedChannel::act(const Matrix& op) const {
    if (op.rows() != 2 || op.cols() != 2) throw std::invalid_argument("SwitchedChannel::act: expected a 2x2 operator");
    const Matrix input = tensor(op, config_.omega.mat());
    Matrix out(4, 4);
    for (const auto& w : kraus_w_) out += sandwich(w, input);
    return out;
}

SwitchedChannel build_switch(const SwitchConfig& config) {
    for (const auto* c : {&config.channel_e, &config.channel_f}) {
        if (c->d_in() != 2 || c->d_out() != 2) throw std::invalid_argument("build_switch: channels must be qubit channels");
        const auto report = validate_cptp(*c);
        if (!report.valid) throw std::invalid_argument("build_switch: channel is not trace preserving");
    }
    if (config.omega.dim() != 2) throw std::invalid_argument("build_switch: control state must be a qubit");

    const Matrix p0 = basis::ketbra(0, 0);
    const Matrix p1 = basis::ketbra(1, 1);
    std::vector<Matrix> kraus_w;
    for (const auto& e : config.channel_e.kraus()) {
        for (const auto& f : config.channel_f.kraus()) kraus_w.push_back(tensor(e * f, p0) + tensor(f * e, p1));
    }

    Matrix completeness(4, 4);
    for (const auto& w : kraus_w) completeness += adjoint(w) * w;
    if ((completeness - Matrix::identity(4)).max_abs() > kTolCptp) {
        throw std::logic_error("build_switch: switched Kraus family is not trace preserving");
    }

    KrausChannel channel = switch_as_channel(kraus_w, config.omega);
    return SwitchedChannel(std::move(kraus_w), config, std::move(channel));
}

DensityMatrix apply_switch(const SwitchedChannel& sc, const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("apply_switch: input must be a qubit state");
    return DensityMatrix(sc.act(rho.mat()), {2, 2});
}

ChoiMatrix switched_choi(const SwitchedChannel& sc) { return kraus_to_choi(sc.as_channel()); }

ControlBlocks control_blocks(const Matrix& joint) {
    if (joint.rows() != 4 || joint.cols() != 4) throw std::invalid_argument("control_blocks: expected a 4x4 joint state");
    ControlBlocks blocks;
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t kp = 0; kp < 2; ++kp) {
            Matrix b(2, 2);
            for (std::size_t a = 0; a < 2; ++a) {
                for (std::size_t c = 0; c < 2; ++c) b(a, c) = joint(a * 2 + k, c * 2 + kp);
            }
            blocks[k][kp] = std::move(b);
        }
    }
    return blocks;
}

ControlBlocks control_blocks(const SwitchedChannel& sc, const DensityMatrix& rho) {
    return control_blocks(apply_switch(sc, rho).mat());
}

DensityMatrix pauli_switch_closed_form(double p, double q, const DensityMatrix& rho) {
    require_probability(p, "p");
    require_probability(q, "q");
    if (rho.dim() != 2) throw std::invalid_argument("pauli_switch_closed_form: input must be a qubit state");
    using namespace pauli;
    const Matrix& r = rho.mat();
    const Matrix plus_branch =
        (1 - p) * (1 - q) * r + p * (1 - q) * sandwich(X(), r) + q * (1 - p) * sandwich(Z(), r);
    const Matrix minus_branch = p * q * sandwich(Y(), r);
    const Matrix pp = Matrix::outer(basis::plus().entries(), basis::plus().entries());
    const Matrix mm = Matrix::outer(basis::minus().entries(), basis::minus().entries());
    return DensityMatrix(tensor(plus_branch, pp) + tensor(minus_branch, mm), {2, 2});
}

SwitchedChannel flip_switch(double p, double q) {
    return build_switch({bit_flip(p), phase_flip(q), DensityMatrix::pure(basis::plus().entries())});
}

}  // namespace causal_switch
