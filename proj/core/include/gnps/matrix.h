// Copyright 2026 The gnps Authors
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


#ifndef GNPS_MATRIX_H
#define GNPS_MATRIX_H

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gnps/qscalar.h"

namespace gnps {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over an amplitude type (CScalar or FScalar).
template <class S>
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<S> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) {
            throw DimensionError("matrix data size does not match its shape");
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t k = 0; k < n; k++) {
            m(k, k) = S(1);
        }
        return m;
    }

    static Matrix column(std::span<const S> v) {
        return Matrix(v.size(), 1, std::vector<S>(v.begin(), v.end()));
    }

    /// |u><v| for column vectors u, v.
    static Matrix outer(std::span<const S> u, std::span<const S> v) {
        Matrix m(u.size(), v.size());
        for (size_t r = 0; r < u.size(); r++) {
            if (is_zero(u[r])) {
                continue;
            }
            for (size_t c = 0; c < v.size(); c++) {
                if (!is_zero(v[c])) {
                    m(r, c) = u[r] * conj(v[c]);
                }
            }
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const S &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    std::span<const S> data() const { return data_; }
    std::span<const S> row(size_t r) const { return std::span<const S>(data_).subspan(r * cols_, cols_); }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                m(c, r) = conj((*this)(r, c));
            }
        }
        return m;
    }

    Matrix &operator+=(const Matrix &o) {
        require_same_shape(o);
        for (size_t k = 0; k < data_.size(); k++) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        require_same_shape(o);
        for (size_t k = 0; k < data_.size(); k++) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product shape mismatch");
        }
        Matrix m(a.rows_, b.cols_);
        for (size_t r = 0; r < a.rows_; r++) {
            for (size_t k = 0; k < a.cols_; k++) {
                const S &x = a(r, k);
                if (is_zero(x)) {
                    continue;
                }
                for (size_t c = 0; c < b.cols_; c++) {
                    const S &y = b(k, c);
                    if (!is_zero(y)) {
                        m(r, c) += x * y;
                    }
                }
            }
        }
        return m;
    }

    friend Matrix operator*(const S &s, Matrix m) {
        for (auto &x : m.data_) {
            x = s * x;
        }
        return m;
    }

    /// Exact for CScalar; tolerance-based for FScalar.
    bool approx_equal(const Matrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            return false;
        }
        for (size_t k = 0; k < data_.size(); k++) {
            if (!is_zero(data_[k] - o.data_[k])) {
                return false;
            }
        }
        return true;
    }

    bool is_zero_matrix() const {
        for (const auto &x : data_) {
            if (!is_zero(x)) {
                return false;
            }
        }
        return true;
    }
    bool is_identity() const { return is_square() && approx_equal(identity(rows_)); }
    bool is_hermitian() const { return is_square() && approx_equal(adjoint()); }
    bool is_unitary() const { return is_square() && (adjoint() * *this).is_identity(); }
    bool is_projector() const { return is_hermitian() && ((*this) * (*this)).approx_equal(*this); }

    S trace() const {
        S t{};
        for (size_t k = 0; k < std::min(rows_, cols_); k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    void require_same_shape(const Matrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw DimensionError("matrix shape mismatch");
        }
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<S> data_;
};

/// Kronecker product; row index of the result is ra * b.rows() + rb.
template <class S>
Matrix<S> kron(const Matrix<S> &a, const Matrix<S> &b) {
    Matrix<S> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ra = 0; ra < a.rows(); ra++) {
        for (size_t ca = 0; ca < a.cols(); ca++) {
            const S &x = a(ra, ca);
            if (is_zero(x)) {
                continue;
            }
            for (size_t rb = 0; rb < b.rows(); rb++) {
                for (size_t cb = 0; cb < b.cols(); cb++) {
                    const S &y = b(rb, cb);
                    if (!is_zero(y)) {
                        m(ra * b.rows() + rb, ca * b.cols() + cb) = x * y;
                    }
                }
            }
        }
    }
    return m;
}

template <class S>
Matrix<FScalar> to_float(const Matrix<S> &m) {
    std::vector<FScalar> data;
    data.reserve(m.rows() * m.cols());
    for (const auto &x : m.data()) {
        data.push_back(to_float(x));
    }
    return Matrix<FScalar>(m.rows(), m.cols(), std::move(data));
}

using ExactMatrix = Matrix<CScalar>;

}  // namespace gnps

#endif
