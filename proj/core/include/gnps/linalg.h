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


#ifndef GNPS_LINALG_H
#define GNPS_LINALG_H

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gnps/matrix.h"
#include "gnps/qscalar.h"

namespace gnps {

/// Sparse row: (column, value) pairs sorted by column, no stored zeros.
template <class F>
using SparseRow = std::vector<std::pair<uint32_t, F>>;

/// Incremental reduced-row-echelon form over a field F.
///
/// Rows are absorbed in insertion order. Each independent row is reduced
/// against the existing pivots, pivoted on its first nonzero column and then
/// eliminated from all earlier pivot rows, so the stored rows are always in
/// RREF. The pivot rule makes the resulting null-space basis deterministic.
template <class F>
class Eliminator {
   public:
    explicit Eliminator(size_t num_unknowns) : num_unknowns_(num_unknowns), pivot_row_of_(num_unknowns, kNone) {}

    size_t num_unknowns() const { return num_unknowns_; }
    size_t rank() const { return rows_.size(); }

    /// Returns true when the row was linearly independent of earlier rows.
    bool add_row(SparseRow<F> row) {
        row = reduce(std::move(row));
        if (row.empty()) {
            return false;
        }
        uint32_t pivot = row.front().first;
        F scale = F(1) / row.front().second;
        for (auto &[col, val] : row) {
            val = val * scale;
        }
        row.front().second = F(1);
        for (auto &other : rows_) {
            auto it = find_col(other, pivot);
            if (it == other.end()) {
                continue;
            }
            F factor = it->second;
            other = axpy(other, row, -factor);
        }
        pivot_row_of_[pivot] = rows_.size();
        pivots_.push_back(pivot);
        rows_.push_back(std::move(row));
        return true;
    }

    void add_dense_row(std::span<const F> row) {
        SparseRow<F> sparse;
        for (size_t c = 0; c < row.size(); c++) {
            if (!is_zero(row[c])) {
                sparse.emplace_back(static_cast<uint32_t>(c), row[c]);
            }
        }
        add_row(std::move(sparse));
    }

    /// Basis of the solution space of the absorbed homogeneous system; one
    /// vector per free column, in increasing column order.
    std::vector<std::vector<F>> null_space() const {
        std::vector<std::vector<F>> basis;
        for (size_t free = 0; free < num_unknowns_; free++) {
            if (pivot_row_of_[free] != kNone) {
                continue;
            }
            std::vector<F> v(num_unknowns_);
            v[free] = F(1);
            for (size_t r = 0; r < rows_.size(); r++) {
                auto it = find_col(rows_[r], static_cast<uint32_t>(free));
                if (it != rows_[r].end()) {
                    v[pivots_[r]] = -it->second;
                }
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::vector<size_t> free_columns() const {
        std::vector<size_t> out;
        for (size_t c = 0; c < num_unknowns_; c++) {
            if (pivot_row_of_[c] == kNone) {
                out.push_back(c);
            }
        }
        return out;
    }

   private:
    static constexpr size_t kNone = static_cast<size_t>(-1);

    static typename SparseRow<F>::const_iterator find_col(const SparseRow<F> &row, uint32_t col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto &entry, uint32_t c) { return entry.first < c; });
        return (it != row.end() && it->first == col) ? it : row.end();
    }

    /// a + s * b, dropping entries that cancel.
    static SparseRow<F> axpy(const SparseRow<F> &a, const SparseRow<F> &b, const F &s) {
        SparseRow<F> out;
        out.reserve(a.size() + b.size());
        size_t i = 0;
        size_t j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                F v = s * b[j].second;
                if (!is_zero(v)) {
                    out.emplace_back(b[j].first, std::move(v));
                }
                j++;
            } else {
                F v = a[i].second + s * b[j].second;
                if (!is_zero(v)) {
                    out.emplace_back(a[i].first, std::move(v));
                }
                i++;
                j++;
            }
        }
        return out;
    }

    SparseRow<F> reduce(SparseRow<F> row) const {
        // Pivot rows hold no pivot columns besides their own, so one pass over
        // the pivot columns present in the input row suffices.
        std::vector<std::pair<size_t, F>> hits;
        for (const auto &[col, val] : row) {
            size_t r = pivot_row_of_[col];
            if (r != kNone) {
                hits.emplace_back(r, val);
            }
        }
        for (const auto &[r, val] : hits) {
            row = axpy(row, rows_[r], -val);
        }
        return row;
    }

    size_t num_unknowns_;
    std::vector<size_t> pivot_row_of_;
    std::vector<uint32_t> pivots_;
    std::vector<SparseRow<F>> rows_;
};

template <class F>
struct NullSpace {
    size_t dimension = 0;
    std::vector<std::vector<F>> basis;
};

/// Exact null space of a dense constraint matrix over Q(sqrt2). Rows are
/// eliminated in order with the first-nonzero-column pivot rule.
NullSpace<QScalar> null_space_real(const std::vector<std::vector<QScalar>> &constraints, size_t num_unknowns);

/// Rank of a matrix over its own field (exact for CScalar).
template <class S>
size_t rank(const Matrix<S> &m) {
    Eliminator<S> elim(m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        elim.add_dense_row(m.row(r));
    }
    return elim.rank();
}

}  // namespace gnps

#endif
