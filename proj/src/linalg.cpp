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

#include "povmsim/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "povmsim/errors.hpp"

namespace povmsim {

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim) {}

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DimensionError("basis index " + std::to_string(k) + " out of range for dimension " +
                             std::to_string(dim));
    }
    ComplexVector v(dim);
    v.entries_[k] = 1.0;
    return v;
}

double ComplexVector::norm() const {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool ComplexVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

ComplexVector ComplexVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw InvalidMeasurementError("cannot normalize the zero vector");
    }
    ComplexVector out(*this);
    out *= 1.0 / n;
    return out;
}

ComplexVector &ComplexVector::operator+=(const ComplexVector &other) {
    if (other.dim() != dim()) {
        throw DimensionError("vector dimension mismatch in +");
    }
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexVector &ComplexVector::operator*=(Complex factor) {
    for (auto &z : entries_) {
        z *= factor;
    }
    return *this;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                             " does not match shape " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); i++) {
        t += (*this)(i, i);
    }
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = r; c < cols_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw DimensionError("matrix shape mismatch in +");
    }
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw DimensionError("matrix shape mismatch in -");
    }
    for (std::size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex factor) {
    for (auto &z : entries_) {
        z *= factor;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex factor) { return a *= factor; }
ComplexMatrix operator*(Complex factor, ComplexMatrix a) { return a *= factor; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex f = a(r, k);
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += f * b(k, c);
            }
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v) {
    if (m.cols() != v.dim()) {
        throw DimensionError("matrix-vector shape mismatch");
    }
    ComplexVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex s = 0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            s += m(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

ComplexVector operator+(ComplexVector a, const ComplexVector &b) { return a += b; }
ComplexVector operator*(Complex factor, ComplexVector v) { return v *= factor; }

ComplexVector tensor(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            Complex f = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product dimension mismatch");
    }
    Complex s = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexMatrix outer(const ComplexVector &a, const ComplexVector &b) {
    ComplexMatrix out(a.dim(), b.dim());
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = 0; c < b.dim(); c++) {
            out(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    std::size_t total = 1;
    for (auto d : dims) {
        if (d == 0) {
            throw DimensionError("partial_trace: zero subsystem dimension");
        }
        total *= d;
    }
    if (!rho.is_square() || rho.rows() != total) {
        throw DimensionError("partial_trace: operator of size " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + " does not match subsystem dims product " +
                             std::to_string(total));
    }
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size()) {
            throw DimensionError("partial_trace: keep index " + std::to_string(k) +
                                 " out of range for " + std::to_string(dims.size()) +
                                 " subsystems");
        }
        kept[k] = true;
    }

    // Split every flat index into (kept part, traced part) once.
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t s = 0; s < dims.size(); s++) {
        (kept[s] ? kept_dim : traced_dim) *= dims[s];
    }
    std::vector<std::size_t> kept_index(total);
    std::vector<std::size_t> traced_index(total);
    for (std::size_t flat = 0; flat < total; flat++) {
        std::size_t rem = flat;
        std::size_t k_idx = 0, k_scale = 1, t_idx = 0, t_scale = 1;
        for (std::size_t s = dims.size(); s-- > 0;) {
            std::size_t digit = rem % dims[s];
            rem /= dims[s];
            if (kept[s]) {
                k_idx += digit * k_scale;
                k_scale *= dims[s];
            } else {
                t_idx += digit * t_scale;
                t_scale *= dims[s];
            }
        }
        kept_index[flat] = k_idx;
        traced_index[flat] = t_idx;
    }

    // Group flat indices by traced part so only matching pairs are visited.
    std::vector<std::vector<std::size_t>> by_traced(traced_dim);
    for (std::size_t flat = 0; flat < total; flat++) {
        by_traced[traced_index[flat]].push_back(flat);
    }
    ComplexMatrix out(kept_dim, kept_dim);
    for (const auto &group : by_traced) {
        for (auto r : group) {
            for (auto c : group) {
                out(kept_index[r], kept_index[c]) += rho(r, c);
            }
        }
    }
    return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw DimensionError("hermitian_eigen: matrix is not square");
    }
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd em(n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        for (Eigen::Index c = 0; c < n; c++) {
            em(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
    HermitianEigen out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(m.rows(), m.rows())};
    for (Eigen::Index i = 0; i < n; i++) {
        out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        for (Eigen::Index r = 0; r < n; r++) {
            out.vectors(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = solver.eigenvectors()(r, i);
        }
    }
    return out;
}

bool is_psd(const ComplexMatrix &m, double tol) {
    if (!m.is_hermitian(tol)) {
        return false;
    }
    if (m.rows() == 0) {
        return true;
    }
    return hermitian_eigen(m).values.front() >= -tol;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.entries().size(); i++) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("max_abs_diff: dimension mismatch");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double phase_aligned_distance(const ComplexVector &a, const ComplexVector &b) {
    Complex overlap = inner(b, a);
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0};
    ComplexVector aligned = phase * b;
    return max_abs_diff(a, aligned);
}

ComplexMatrix from_eigen(const std::vector<double> &values, const ComplexMatrix &vectors) {
    const std::size_t n = vectors.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < values.size(); k++) {
        if (values[k] == 0) {
            continue;
        }
        for (std::size_t r = 0; r < n; r++) {
            Complex vr = vectors(r, k) * values[k];
            for (std::size_t c = 0; c < n; c++) {
                out(r, c) += vr * std::conj(vectors(c, k));
            }
        }
    }
    return out;
}

}  // namespace povmsim
