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

#include <cmath>
#include <vector>

#include "causal_switch/channel.hpp"
#include "causal_switch/qmat.hpp"
#include "causal_switch/rng.hpp"

// Random instances and brute-force oracles shared by the test binaries.
// Oracles here use plain index loops and never call the library's algebra.

namespace causal_switch::testing {

inline cplx random_complex(SplitMix64& rng) { return {rng.normal(), rng.normal()}; }

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
    }
    return m;
}

inline Matrix random_hermitian(SplitMix64& rng, std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < dim; ++j) {
            m(i, j) = random_complex(rng);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

/// Haar-ish unitary: Gram-Schmidt on the columns of a Gaussian matrix.
inline Matrix random_unitary(SplitMix64& rng, std::size_t dim) {
    Matrix g = random_matrix(rng, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx dot = 0;
            for (std::size_t i = 0; i < dim; ++i) dot += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < dim; ++i) g(i, j) -= dot * g(i, k);
        }
        double norm = 0;
        for (std::size_t i = 0; i < dim; ++i) norm += std::norm(g(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < dim; ++i) g(i, j) /= norm;
    }
    return g;
}

/// Isometry with `rows` >= `cols`: first columns of a random unitary.
inline Matrix random_isometry(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    const Matrix u = random_unitary(rng, rows);
    Matrix v(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) v(i, j) = u(i, j);
    }
    return v;
}

inline std::vector<cplx> random_vector(SplitMix64& rng, std::size_t dim) {
    std::vector<cplx> v(dim);
    double norm = 0;
    for (auto& z : v) {
        z = random_complex(rng);
        norm += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(norm);
    return v;
}

inline DensityMatrix random_pure(SplitMix64& rng, std::size_t dim, std::vector<std::size_t> dims = {}) {
    return DensityMatrix::pure(random_vector(rng, dim), std::move(dims));
}

/// G G^† / Tr(G G^†), full rank with probability 1.
inline DensityMatrix random_density(SplitMix64& rng, std::size_t dim, std::vector<std::size_t> dims = {}) {
    const Matrix g = random_matrix(rng, dim, dim);
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t k = 0; k < dim; ++k) m(i, j) += g(i, k) * std::conj(g(j, k));
        }
    }
    const double t = m.trace().real();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) /= t;
    }
    return DensityMatrix(std::move(m), std::move(dims));
}

/// Random qubit channel: a random isometry 2 -> 2n split into n Kraus blocks.
inline KrausChannel random_qubit_channel(SplitMix64& rng, std::size_t n_kraus) {
    const Matrix v = random_isometry(rng, 2 * n_kraus, 2);
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < n_kraus; ++k) {
        Matrix op(2, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) op(i, j) = v(2 * k + i, j);
        }
        ops.push_back(std::move(op));
    }
    return KrausChannel(std::move(ops), 2, 2);
}

inline Matrix naive_matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

inline Matrix naive_adjoint(const Matrix& a) {
    Matrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    }
    return c;
}

inline double max_entry_diff(const Matrix& a, const Matrix& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    }
    return d;
}

}  // namespace causal_switch::testing
