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


// Independent oracle for the orthogonality-preserving operator space.
//
// Works over the prime field F_p with p = 2^61 - 1. Since p = -1 mod 8, two
// is a square mod p, so a + b*sqrt2 maps to a + b*s with s^2 = 2. Complex
// amplitudes are kept as formal pairs (re, im). The constraint matrix is
// built densely, one column per Hermitian generator, straight from the
// flattened kets, then reduced by plain Gaussian elimination. Reduction mod
// p can only lower the rank, and does so with negligible probability.

#ifndef GNPS_TESTS_OPLM_ORACLE_H
#define GNPS_TESTS_OPLM_ORACLE_H

#include <cstdint>
#include <vector>

#include "gnps/model.h"
#include "gnps/oplm.h"

namespace gnps::testing {

class ModP {
   public:
    static constexpr uint64_t p = (uint64_t{1} << 61) - 1;

    static uint64_t add(uint64_t a, uint64_t b) {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    static uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + p - b; }
    static uint64_t mul(uint64_t a, uint64_t b) {
        unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
        uint64_t r = static_cast<uint64_t>(x & p) + static_cast<uint64_t>(x >> 61);
        r = (r & p) + (r >> 61);
        return r >= p ? r - p : r;
    }
    static uint64_t pow(uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    static uint64_t inv(uint64_t a) { return pow(a, p - 2); }
    static uint64_t sqrt2() {
        static const uint64_t s = pow(2, (p + 1) / 4);
        return s;
    }
    static uint64_t from_mpz(const mpz_class &z) {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
        if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
        return r.get_ui();
    }
    static uint64_t from_mpq(const mpq_class &q) {
        return mul(from_mpz(q.get_num()), inv(from_mpz(q.get_den())));
    }
    static uint64_t from(const QScalar &x) {
        return add(from_mpq(x.rational_part()), mul(from_mpq(x.sqrt2_part()), sqrt2()));
    }
};

struct ModC {
    uint64_t re = 0;
    uint64_t im = 0;
};

inline ModC mod_conj_mul(const ModC &x, const ModC &y) {
    // conj(x) * y with i^2 = -1.
    return {ModP::add(ModP::mul(x.re, y.re), ModP::mul(x.im, y.im)),
            ModP::sub(ModP::mul(x.re, y.im), ModP::mul(x.im, y.re))};
}

inline size_t dense_rank_mod_p(std::vector<std::vector<uint64_t>> m) {
    size_t rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && rank < m.size(); c++) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) piv++;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        uint64_t s = ModP::inv(m[rank][c]);
        for (auto &x : m[rank]) x = ModP::mul(x, s);
        for (size_t r = 0; r < m.size(); r++) {
            if (r == rank || m[r][c] == 0) continue;
            uint64_t f = m[r][c];
            for (size_t k = c; k < cols; k++) {
                m[r][k] = ModP::sub(m[r][k], ModP::mul(f, m[rank][k]));
            }
        }
        rank++;
    }
    return rank;
}

/// Dimension of {Hermitian E on the group : <psi_i|E (x) I|psi_j> = 0, i != j}.
inline size_t oracle_oplm_dimension(const StateSet &set, const std::vector<std::string> &group) {
    const PartyLayout &layout = set.layout;
    std::vector<size_t> in_group;
    std::vector<size_t> rest;
    for (size_t p = 0; p < layout.size(); p++) {
        bool g = false;
        for (const auto &name : group) g = g || layout.party(p).name == name;
        (g ? in_group : rest).push_back(p);
    }
    size_t d = 1;
    for (size_t p : in_group) d *= layout.party(p).dim;
    size_t r_dim = layout.total_dim() / d;

    // psi[m][k][r] with k the group index and r the rest index.
    std::vector<std::vector<std::vector<ModC>>> psi(set.size(), std::vector<std::vector<ModC>>(d, std::vector<ModC>(r_dim)));
    for (size_t m = 0; m < set.size(); m++) {
        const auto &amps = set.members[m].ket.amplitudes;
        for (size_t g = 0; g < amps.size(); g++) {
            size_t k = 0;
            size_t r = 0;
            for (size_t p : in_group) k = k * layout.party(p).dim + layout.system_digit(g, p);
            for (size_t p : rest) r = r * layout.party(p).dim + layout.system_digit(g, p);
            psi[m][k][r] = {ModP::from(amps[g].re()), ModP::from(amps[g].im())};
        }
    }
    auto overlap = [&](size_t i, size_t j, size_t k, size_t l) {
        // <psi_i| (|k><l| (x) I) |psi_j>.
        ModC acc;
        for (size_t r = 0; r < r_dim; r++) {
            ModC t = mod_conj_mul(psi[i][k][r], psi[j][l][r]);
            acc.re = ModP::add(acc.re, t.re);
            acc.im = ModP::add(acc.im, t.im);
        }
        return acc;
    };

    size_t n = d * d;
    std::vector<std::vector<uint64_t>> rows;
    for (size_t i = 0; i < set.size(); i++) {
        for (size_t j = i + 1; j < set.size(); j++) {
            std::vector<uint64_t> re(n);
            std::vector<uint64_t> im(n);
            size_t col = 0;
            for (size_t k = 0; k < d; k++, col++) {
                ModC v = overlap(i, j, k, k);
                re[col] = v.re;
                im[col] = v.im;
            }
            for (size_t k = 0; k < d; k++) {
                for (size_t l = k + 1; l < d; l++) {
                    ModC a = overlap(i, j, k, l);
                    ModC b = overlap(i, j, l, k);
                    // Generator |k><l| + |l><k|.
                    re[col] = ModP::add(a.re, b.re);
                    im[col] = ModP::add(a.im, b.im);
                    col++;
                    // Generator i|k><l| - i|l><k|: i*a - i*b.
                    re[col] = ModP::sub(b.im, a.im);
                    im[col] = ModP::sub(a.re, b.re);
                    col++;
                }
            }
            rows.push_back(std::move(re));
            rows.push_back(std::move(im));
        }
    }
    return n - dense_rank_mod_p(std::move(rows));
}

}  // namespace gnps::testing

#endif
