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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace causal_switch {

using cplx = std::complex<double>;

inline constexpr double kTolHerm = 1e-9;
inline constexpr double kTolTrace = 1e-9;
inline constexpr double kTolPsd = 1e-9;
inline constexpr double kTolEig = 1e-9;

/// Dense complex matrix, row-major.
///
/// All operator algebra in the library (states, Kraus operators, Choi
/// operators) goes through this type. Entries must stay finite; the
/// constructors reject NaN/Inf.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    /// Row-by-row literal, e.g. Matrix{{0, 1}, {1, 0}}.
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static Matrix zeros(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const double> values);
    /// Column vector from amplitudes.
    static Matrix column(std::span<const cplx> amplitudes);
    /// |ket><bra|
    static Matrix outer(std::span<const cplx> ket, std::span<const cplx> bra);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const cplx> entries() const { return data_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(cplx scalar);

    cplx trace() const;
    double frobenius_norm() const;
    /// Largest |entry|.
    double max_abs() const;

    bool operator==(const Matrix& other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);
Matrix operator*(Matrix a, cplx s);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Matrix transpose(const Matrix& a);
/// Kronecker product. `a` is the left (particle) factor, `b` the right
/// (control) factor: (a⊗b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
Matrix tensor(const Matrix& a, const Matrix& b);
/// a * rho * a^dagger
Matrix sandwich(const Matrix& a, const Matrix& rho);
double frobenius_distance(const Matrix& a, const Matrix& b);
/// Largest |a - a^dagger| entry, 0 for exactly Hermitian input.
double hermiticity_defect(const Matrix& a);

/// Partial trace of a square matrix laid out as a tensor product with the
/// given subsystem dimensions (left to right). `keep` lists the subsystems to
/// retain, in any order; the result keeps them in ascending order.
Matrix partial_trace(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> keep);

/// Hermitian, PSD, unit-trace matrix together with its subsystem layout.
class DensityMatrix {
   public:
    /// Validates the density-matrix invariants (tolerances kTolHerm,
    /// kTolPsd, kTolTrace) and throws std::invalid_argument on violation.
    /// An empty `dims` means a single subsystem.
    explicit DensityMatrix(Matrix mat, std::vector<std::size_t> dims = {});

    /// |psi><psi| after normalizing psi.
    static DensityMatrix pure(std::span<const cplx> psi, std::vector<std::size_t> dims = {});
    static DensityMatrix maximally_mixed(std::size_t dim);

    const Matrix& mat() const { return mat_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return mat_.rows(); }

   private:
    Matrix mat_;
    std::vector<std::size_t> dims_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k pairs with values[k]
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Sweeps until the
/// off-diagonal Frobenius norm falls below 1e-12 (at most 100 sweeps).
/// Throws std::invalid_argument for non-square or non-Hermitian input.
EigenDecomposition hermitian_eig(const Matrix& m);
std::vector<double> hermitian_eigenvalues(const Matrix& m);

namespace pauli {
const Matrix& I();
const Matrix& X();
const Matrix& Y();
const Matrix& Z();
}  // namespace pauli

namespace basis {
const Matrix& ket0();
const Matrix& ket1();
const Matrix& plus();
const Matrix& minus();
/// |k><k'| for k, k' in {0, 1}.
Matrix ketbra(std::size_t k, std::size_t kp);
}  // namespace basis

}  // namespace causal_switch
