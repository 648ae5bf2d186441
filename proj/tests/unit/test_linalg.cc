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


#include "gnps/linalg.h"

#include <random>

#include <gtest/gtest.h>

using namespace gnps;

namespace {

std::vector<std::vector<QScalar>> random_system(std::mt19937_64 &rng, size_t rows, size_t cols) {
    std::uniform_int_distribution<long> v(-3, 3);
    std::bernoulli_distribution sparse(0.6);
    std::vector<std::vector<QScalar>> m(rows, std::vector<QScalar>(cols));
    for (auto &row : m) {
        for (auto &x : row) {
            if (!sparse(rng)) {
                x = QScalar(v(rng), v(rng));
            }
        }
    }
    return m;
}

QScalar dot(const std::vector<QScalar> &a, const std::vector<QScalar> &b) {
    QScalar s;
    for (size_t k = 0; k < a.size(); k++) {
        s += a[k] * b[k];
    }
    return s;
}

}  // namespace

TEST(Linalg, null_space_satisfies_constraints) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; t++) {
        size_t rows = 1 + rng() % 7;
        size_t cols = 1 + rng() % 8;
        auto m = random_system(rng, rows, cols);
        auto ns = null_space_real(m, cols);
        for (const auto &v : ns.basis) {
            for (const auto &row : m) {
                EXPECT_TRUE(dot(row, v).is_zero());
            }
        }
        Matrix<CScalar> cm(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                cm(r, c) = CScalar(m[r][c]);
            }
        }
        EXPECT_EQ(ns.dimension + rank(cm), cols);
        EXPECT_EQ(ns.basis.size(), ns.dimension);
    }
}

TEST(Linalg, duplicate_rows_do_not_add_rank) {
    Eliminator<QScalar> e(3);
    EXPECT_TRUE(e.add_row({{0, QScalar(1)}, {2, QScalar::sqrt2()}}));
    EXPECT_FALSE(e.add_row({{0, QScalar(2)}, {2, QScalar(0, 2)}}));
    EXPECT_EQ(e.rank(), 1u);
    EXPECT_EQ(e.free_columns(), (std::vector<size_t>{1, 2}));
}

TEST(Linalg, kron_of_projector_summands) {
    // P[p; 0] + P[(q,1,2); 1] on C^4 (x) C^2 is block diagonal with
    // a rank-1 and a rank-3 block.
    auto proj = [](size_t d, std::vector<size_t> levels) {
        Matrix<CScalar> m(d, d);
        for (size_t l : levels) m(l, l) = CScalar(1);
        return m;
    };
    auto m = kron(proj(4, {0}), proj(2, {0})) + kron(proj(4, {1, 2, 3}), proj(2, {1}));
    EXPECT_TRUE(m.is_projector());
    EXPECT_EQ(rank(m), 4u);
    EXPECT_EQ(m.trace(), CScalar(4));
    EXPECT_EQ(m(0, 0), CScalar(1));
    EXPECT_EQ(m(1, 1), CScalar(0));
    EXPECT_EQ(m(3, 3), CScalar(1));
}

TEST(Linalg, kron_dimensions_and_mismatch) {
    Matrix<CScalar> a(2, 3);
    Matrix<CScalar> b(4, 5);
    auto k = kron(a, b);
    EXPECT_EQ(k.rows(), 8u);
    EXPECT_EQ(k.cols(), 15u);
    EXPECT_THROW(a * a, DimensionError);
}

TEST(Linalg, hadamard_is_unitary) {
    Matrix<CScalar> h(2, 2);
    h(0, 0) = h(0, 1) = h(1, 0) = CScalar(QScalar::inv_sqrt2());
    h(1, 1) = CScalar(-QScalar::inv_sqrt2());
    EXPECT_TRUE(h.is_unitary());
    EXPECT_TRUE(kron(h, h).is_unitary());
}
