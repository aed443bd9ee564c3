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

#include "causal_switch/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace causal_switch {

namespace {

void require_finite(std::span<const cplx> data) {
    for (const auto& z : data) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("Matrix: non-finite entry");
        }
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

std::size_t product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("Matrix: entry count does not match shape");
    }
    require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::column(std::span<const cplx> amplitudes) {
    return Matrix(amplitudes.size(), 1, std::vector<cplx>(amplitudes.begin(), amplitudes.end()));
}

Matrix Matrix::outer(std::span<const cplx> ket, std::span<const cplx> bra) {
    Matrix m(ket.size(), bra.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < bra.size(); ++j) {
            m(i, j) = ket[i] * std::conj(bra[j]);
        }
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(cplx scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
}

cplx Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
    cplx t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cplx s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, cplx s) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch (" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix adjoint(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Matrix sandwich(const Matrix& a, const Matrix& rho) { return matmul(matmul(a, rho), adjoint(a)); }

double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }

double hermiticity_defect(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("hermiticity_defect: matrix is not square");
    double d = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    }
    return d;
}

Matrix partial_trace(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
    const std::size_t n = dims.size();
    if (!m.is_square() || product(dims) != m.rows()) {
        throw std::invalid_argument("partial_trace: dims do not match matrix dimension");
    }
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::vector<bool> kept(n, false);
    for (auto s : keep) {
        if (s >= n) throw std::invalid_argument("partial_trace: invalid subsystem index " + std::to_string(s));
        kept[s] = true;
    }

    // Strides of the full row index, then dimensions of kept / traced parts.
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t s = n; s-- > 1;) stride[s - 1] = stride[s] * dims[s];
    std::vector<std::size_t> keep_sys, trace_sys;
    for (std::size_t s = 0; s < n; ++s) (kept[s] ? keep_sys : trace_sys).push_back(s);

    auto dims_of = [&](const std::vector<std::size_t>& sys) {
        std::size_t d = 1;
        for (auto s : sys) d *= dims[s];
        return d;
    };
    // Offset into the full index contributed by a multi-index over `sys`.
    auto offset = [&](const std::vector<std::size_t>& sys, std::size_t flat) {
        std::size_t off = 0;
        for (std::size_t k = sys.size(); k-- > 0;) {
            const std::size_t s = sys[k];
            off += (flat % dims[s]) * stride[s];
            flat /= dims[s];
        }
        return off;
    };

    const std::size_t dk = dims_of(keep_sys);
    const std::size_t dt = dims_of(trace_sys);
    std::vector<std::size_t> keep_off(dk), trace_off(dt);
    for (std::size_t x = 0; x < dk; ++x) keep_off[x] = offset(keep_sys, x);
    for (std::size_t t = 0; t < dt; ++t) trace_off[t] = offset(trace_sys, t);

    Matrix out(dk, dk);
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            cplx s = 0;
            for (std::size_t t = 0; t < dt; ++t) s += m(keep_off[a] + trace_off[t], keep_off[b] + trace_off[t]);
            out(a, b) = s;
        }
    }
    return out;
}

DensityMatrix::DensityMatrix(Matrix mat, std::vector<std::size_t> dims) : mat_(std::move(mat)), dims_(std::move(dims)) {
    if (!mat_.is_square() || mat_.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
    }
    if (dims_.empty()) dims_ = {mat_.rows()};
    if (product(dims_) != mat_.rows()) {
        throw std::invalid_argument("DensityMatrix: subsystem dims do not multiply to the matrix dimension");
    }
    if (hermiticity_defect(mat_) > kTolHerm) throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(mat_.trace() - cplx{1.0}) > kTolTrace) throw std::invalid_argument("DensityMatrix: trace is not 1");
    const auto eig = hermitian_eigenvalues(mat_);
    if (eig.back() < -kTolPsd) throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi, std::vector<std::size_t> dims) {
    double norm2 = 0;
    for (const auto& z : psi) norm2 += std::norm(z);
    if (!(norm2 > 0)) throw std::invalid_argument("DensityMatrix::pure: zero vector");
    Matrix m = Matrix::outer(psi, psi);
    m *= 1.0 / norm2;
    return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    Matrix m = Matrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix(tensor(a.mat(), b.mat()), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
    Matrix reduced = partial_trace(rho.mat(), rho.dims(), keep);
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> dims;
    for (auto s : sorted) dims.push_back(rho.dims()[s]);
    return DensityMatrix(std::move(reduced), std::move(dims));
}

EigenDecomposition hermitian_eig(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eig: matrix is not square");
    if (hermiticity_defect(m) > kTolHerm) throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    const std::size_t n = m.rows();

    Matrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) a(j, i) = std::conj(a(i, j));
    }
    Matrix v = Matrix::identity(n);

    auto off_norm = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) s += 2 * std::norm(a(i, j));
        }
        return std::sqrt(s);
    };

    constexpr double kOffThreshold = 1e-12;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() > kOffThreshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r < 1e-300) continue;
                // Phase e^{-i phi} on column q makes a(p, q) real, then a real
                // Givens rotation annihilates it.
                const cplx phase = std::conj(a(p, q)) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2 * r);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                // J restricted to (p, q): [[c, s], [-s*phase, c*phase]]
                const cplx jpp = c, jpq = s, jqp = -s * phase, jqq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {  // a <- a J
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // a <- J^dagger a
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {  // v <- v J
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) { return hermitian_eig(m).values; }

namespace pauli {
const Matrix& I() {
    static const Matrix m{{1, 0}, {0, 1}};
    return m;
}
const Matrix& X() {
    static const Matrix m{{0, 1}, {1, 0}};
    return m;
}
const Matrix& Y() {
    // i(|1><0| - |0><1|)
    static const Matrix m{{0, cplx(0, -1)}, {cplx(0, 1), 0}};
    return m;
}
const Matrix& Z() {
    static const Matrix m{{1, 0}, {0, -1}};
    return m;
}
}  // namespace pauli

namespace basis {
const Matrix& ket0() {
    static const Matrix m{{1}, {0}};
    return m;
}
const Matrix& ket1() {
    static const Matrix m{{0}, {1}};
    return m;
}
const Matrix& plus() {
    static const Matrix m{{M_SQRT1_2}, {M_SQRT1_2}};
    return m;
}
const Matrix& minus() {
    static const Matrix m{{M_SQRT1_2}, {-M_SQRT1_2}};
    return m;
}
Matrix ketbra(std::size_t k, std::size_t kp) {
    if (k > 1 || kp > 1) throw std::invalid_argument("ketbra: qubit index out of range");
    Matrix m(2, 2);
    m(k, kp) = 1.0;
    return m;
}
}  // namespace basis

}  // namespace causal_switch
