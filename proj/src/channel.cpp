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

#include "causal_switch/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "causal_switch/entropic.hpp"

namespace causal_switch {

void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus, std::size_t d_in, std::size_t d_out)
    : kraus_(std::move(kraus)), d_in_(d_in), d_out_(d_out) {
    if (kraus_.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
    if (d_in_ == 0 || d_out_ == 0) throw std::invalid_argument("KrausChannel: zero dimension");
    for (const auto& k : kraus_) {
        if (k.rows() != d_out_ || k.cols() != d_in_) {
            throw std::invalid_argument("KrausChannel: Kraus operator has wrong shape");
        }
    }
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus)
    : KrausChannel(kraus, kraus.empty() ? 0 : kraus.front().cols(), kraus.empty() ? 0 : kraus.front().rows()) {}

CptpReport validate_cptp(const KrausChannel& c) {
    Matrix sum(c.d_in(), c.d_in());
    for (const auto& k : c.kraus()) sum += adjoint(k) * k;
    const double violation = (sum - Matrix::identity(c.d_in())).max_abs();
    return {violation <= kTolCptp, violation};
}

Matrix apply(const KrausChannel& c, const Matrix& op) {
    if (op.rows() != c.d_in() || op.cols() != c.d_in()) {
        throw std::invalid_argument("apply: operator dimension does not match channel input");
    }
    Matrix out(c.d_out(), c.d_out());
    for (const auto& k : c.kraus()) out += sandwich(k, op);
    return out;
}

DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho) {
    if (rho.dim() != c.d_in()) throw std::invalid_argument("apply: state dimension does not match channel input");
    return DensityMatrix(apply(c, rho.mat()));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
    if (first.d_out() != second.d_in()) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Matrix> ops;
    ops.reserve(second.kraus().size() * first.kraus().size());
    for (const auto& k : second.kraus()) {
        for (const auto& l : first.kraus()) ops.push_back(k * l);
    }
    return KrausChannel(std::move(ops), first.d_in(), second.d_out());
}

ChoiMatrix kraus_to_choi(const KrausChannel& c) {
    // C[(a,i),(b,j)] = (1/d_in) Σ_k K[a,i] conj(K[b,j]): the row-major
    // vectorization of each K_i is a column of a Choi square root.
    const std::size_t n = c.d_out() * c.d_in();
    Matrix mat(n, n);
    const double scale = 1.0 / static_cast<double>(c.d_in());
    for (const auto& k : c.kraus()) {
        const auto v = k.entries();
        for (std::size_t x = 0; x < n; ++x) {
            if (v[x] == cplx{}) continue;
            for (std::size_t y = 0; y < n; ++y) mat(x, y) += scale * v[x] * std::conj(v[y]);
        }
    }
    return {std::move(mat), c.d_in(), c.d_out()};
}

KrausChannel choi_to_kraus(const ChoiMatrix& c) {
    const auto eig = hermitian_eig(c.mat);
    if (eig.values.back() < -kTolPsd) throw std::invalid_argument("choi_to_kraus: Choi matrix is not PSD");
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        const double lambda = eig.values[k];
        if (lambda <= kKrausPruneThreshold) continue;
        const double w = std::sqrt(lambda * static_cast<double>(c.d_in));
        Matrix op(c.d_out, c.d_in);
        for (std::size_t a = 0; a < c.d_out; ++a) {
            for (std::size_t i = 0; i < c.d_in; ++i) op(a, i) = w * eig.vectors(a * c.d_in + i, k);
        }
        ops.push_back(std::move(op));
    }
    if (ops.empty()) throw std::invalid_argument("choi_to_kraus: Choi matrix is zero");
    return KrausChannel(std::move(ops), c.d_in, c.d_out);
}

Matrix apply_choi(const ChoiMatrix& c, const Matrix& op) {
    if (op.rows() != c.d_in || op.cols() != c.d_in) throw std::invalid_argument("apply_choi: dimension mismatch");
    const Matrix lifted = c.mat * tensor(Matrix::identity(c.d_out), transpose(op));
    const std::size_t dims[] = {c.d_out, c.d_in};
    const std::size_t keep[] = {0};
    Matrix out = partial_trace(lifted, dims, keep);
    out *= static_cast<double>(c.d_in);
    return out;
}

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
    if (a.d_in != b.d_in || a.d_out != b.d_out) throw std::invalid_argument("choi_distance: dimension mismatch");
    return frobenius_distance(a.mat, b.mat);
}

bool same_channel(const KrausChannel& a, const KrausChannel& b) {
    return a.d_in() == b.d_in() && a.d_out() == b.d_out() &&
           choi_distance(kraus_to_choi(a), kraus_to_choi(b)) < kChannelEqualityTolerance;
}

KrausChannel remix(const KrausChannel& c, const Matrix& isometry) {
    const std::size_t n = c.kraus().size();
    if (isometry.cols() != n || isometry.rows() < n) {
        throw std::invalid_argument("remix: isometry shape does not match the Kraus count");
    }
    std::vector<Matrix> ops;
    for (std::size_t a = 0; a < isometry.rows(); ++a) {
        Matrix op(c.d_out(), c.d_in());
        for (std::size_t i = 0; i < n; ++i) op += isometry(a, i) * c.kraus()[i];
        ops.push_back(std::move(op));
    }
    return KrausChannel(std::move(ops), c.d_in(), c.d_out());
}

KrausChannel conjugated(const KrausChannel& c, const Matrix& v) {
    if (c.d_in() != c.d_out() || v.rows() != c.d_in() || v.cols() != c.d_in()) {
        throw std::invalid_argument("conjugated: dimension mismatch");
    }
    std::vector<Matrix> ops;
    for (const auto& k : c.kraus()) ops.push_back(v * k * adjoint(v));
    return KrausChannel(std::move(ops), c.d_in(), c.d_out());
}

KrausChannel identity_channel(std::size_t dim) { return KrausChannel({Matrix::identity(dim)}, dim, dim); }

KrausChannel unitary_channel(const Matrix& u) {
    if (!u.is_square()) throw std::invalid_argument("unitary_channel: matrix is not square");
    KrausChannel c({u}, u.cols(), u.rows());
    if (!validate_cptp(c).valid) throw std::invalid_argument("unitary_channel: matrix is not unitary");
    return c;
}

KrausChannel bit_flip(double p) {
    require_probability(p, "bit_flip p");
    return KrausChannel({std::sqrt(1 - p) * pauli::I(), std::sqrt(p) * pauli::X()}, 2, 2);
}

KrausChannel phase_flip(double q) {
    require_probability(q, "phase_flip q");
    return KrausChannel({std::sqrt(1 - q) * pauli::I(), std::sqrt(q) * pauli::Z()}, 2, 2);
}

KrausChannel depolarizing(double p) {
    require_probability(p, "depolarizing p");
    const double w = std::sqrt(p / 4);
    return KrausChannel({std::sqrt(1 - 3 * p / 4) * pauli::I(), w * pauli::X(), w * pauli::Y(), w * pauli::Z()}, 2, 2);
}

double dephasing_capacity(double p) {
    require_probability(p, "dephasing_capacity p");
    return 1.0 - binary_entropy(p);
}

}  // namespace causal_switch
