// Copyright 2026 The povmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra used throughout povmsim.
//
// Index convention (used by every module): when several subsystems are
// combined with `tensor`, subsystem 0 is the most significant digit of the
// flat index. For subsystems of dimensions (d0, d1, ..., dk) the basis state
// |i0 i1 ... ik> lives at index ((i0 * d1 + i1) * d2 + i2) ... . For qubit
// registers this means qubit 0 is the most significant bit, and bitstrings
// are written with qubit 0 first.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace povmsim {

using Complex = std::complex<double>;

class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim);
    explicit ComplexVector(std::vector<Complex> entries);
    ComplexVector(std::initializer_list<Complex> entries);

    /// Computational basis vector |k> of dimension `dim`.
    static ComplexVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return entries_.size(); }
    Complex operator[](std::size_t i) const { return entries_[i]; }
    Complex &operator[](std::size_t i) { return entries_[i]; }
    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    double norm() const;
    bool is_normalized(double tol = 1e-10) const;
    ComplexVector normalized() const;

    ComplexVector &operator+=(const ComplexVector &other);
    ComplexVector &operator*=(Complex factor);

    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<Complex> entries_;
};

class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-by-row construction; all rows must have the same length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex trace() const;
    bool is_hermitian(double tol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex factor);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex factor);
ComplexMatrix operator*(Complex factor, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v);
ComplexVector operator+(ComplexVector a, const ComplexVector &b);
ComplexVector operator*(Complex factor, ComplexVector v);

/// Kronecker product; `a` is the most significant factor.
ComplexVector tensor(const ComplexVector &a, const ComplexVector &b);
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix &m);

/// <a|b>, conjugate-linear in `a`.
Complex inner(const ComplexVector &a, const ComplexVector &b);

/// |a><b|
ComplexMatrix outer(const ComplexVector &a, const ComplexVector &b);

/// Reduced operator on the subsystems listed in `keep`.
///
/// `dims` gives the dimension of each subsystem of `rho` in tensor order.
/// Kept subsystems appear in the result in ascending index order regardless
/// of the order in which `keep` lists them. Throws DimensionError when the
/// dimensions do not multiply to rho's size or an index is out of range.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

struct HermitianEigen {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column i pairs with values[i]
};

/// Eigendecomposition of a Hermitian matrix. Only the lower triangle is read.
HermitianEigen hermitian_eigen(const ComplexMatrix &m);

/// True iff `m` is Hermitian within `tol` (entrywise) and its smallest
/// eigenvalue is at least -tol.
bool is_psd(const ComplexMatrix &m, double tol);

/// Largest entrywise absolute difference. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);

/// max_i |a_i - e^{i phi} b_i| with phi = arg <b|a>, the global phase that
/// best aligns b onto a.
double phase_aligned_distance(const ComplexVector &a, const ComplexVector &b);

/// Rebuild V diag(values) V^dagger.
ComplexMatrix from_eigen(const std::vector<double> &values, const ComplexMatrix &vectors);

}  // namespace povmsim
