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


#include "gnps/catalog.h"
#include "gnps/linalg.h"

#include <gtest/gtest.h>

#include "support/oplm_oracle.h"

using namespace gnps;

namespace {

CScalar h() { return CScalar(QScalar::inv_sqrt2()); }

std::vector<CScalar> e(size_t dim, size_t k) {
    std::vector<CScalar> v(dim);
    v[k] = CScalar(1);
    return v;
}

std::vector<CScalar> sup(size_t dim, size_t a, size_t b, int sign) {
    std::vector<CScalar> v(dim);
    v[a] = h();
    v[b] = sign > 0 ? h() : -h();
    return v;
}

/// Tensor of per-party vectors, first party most significant.
std::vector<CScalar> flat(const std::vector<std::vector<CScalar>> &parts) {
    std::vector<CScalar> out{CScalar(1)};
    for (const auto &p : parts) {
        std::vector<CScalar> next;
        for (const auto &x : out) {
            for (const auto &y : p) {
                next.push_back(x * y);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Gram entries computed with a plain loop, independent of gnps::inner.
bool pairwise_orthonormal(const StateSet &s) {
    for (size_t i = 0; i < s.size(); i++) {
        for (size_t j = i; j < s.size(); j++) {
            CScalar acc;
            const auto &a = s.members[i].ket.amplitudes;
            const auto &b = s.members[j].ket.amplitudes;
            for (size_t k = 0; k < a.size(); k++) {
                acc += a[k].conj() * b[k];
            }
            if (acc != CScalar(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(Catalog, cardinalities) {
    EXPECT_EQ(build_s_ben().size(), 8u);
    EXPECT_EQ(build_g3().size(), 14u);
    for (size_t m = 1; m <= 4; m++) {
        EXPECT_EQ(build_g_general(m).size(), 6 * m + 2) << m;
    }
    EXPECT_EQ(build_sg5().size(), 24u);
    EXPECT_EQ(build_sigma().size(), 42u);
    EXPECT_EQ(build_h().size(), 27u);
    EXPECT_EQ(build_h_prime().size(), 8u);
}

TEST(Catalog, every_set_is_exactly_orthonormal) {
    for (const auto &name : {"s_ben", "g3", "sg5", "sigma", "h", "h_prime"}) {
        EXPECT_TRUE(pairwise_orthonormal(build_catalog_set(name))) << name;
    }
    for (size_t m = 1; m <= 4; m++) {
        EXPECT_TRUE(pairwise_orthonormal(build_g_general(m))) << m;
    }
}

TEST(Catalog, layouts) {
    auto g = build_g_general(4);
    EXPECT_EQ(g.layout.party(0).dim, 6u);
    EXPECT_EQ(g.layout.total_dim(), 486u);
    EXPECT_EQ(build_sigma().layout.total_dim(), 150u);
    EXPECT_EQ(build_g3().layout.total_dim(), 36u);
}

TEST(Catalog, g3_members_match_definitions) {
    // Label maps: A p,q,1,2 -> 0..3; B p,q,1 -> 0..2; C p,q,2 -> 0..2.
    auto g = build_g3();
    EXPECT_EQ(g.layout.party(0).labels, (std::vector<std::string>{"p", "q", "1", "2"}));
    EXPECT_EQ(g.layout.party(1).labels, (std::vector<std::string>{"p", "q", "1"}));
    EXPECT_EQ(g.layout.party(2).labels, (std::vector<std::string>{"p", "q", "2"}));
    EXPECT_EQ(g.member("zeta0+").ket.amplitudes, flat({sup(4, 0, 1, 1), e(3, 2), e(3, 2)}));
    EXPECT_EQ(g.member("zeta1.1-").ket.amplitudes, flat({e(4, 2), sup(3, 1, 2, -1), e(3, 2)}));
    EXPECT_EQ(g.member("zeta1.3+").ket.amplitudes, flat({e(4, 0), sup(3, 0, 1, 1), e(3, 2)}));
    EXPECT_EQ(g.member("zeta2.2+").ket.amplitudes, flat({sup(4, 1, 3, 1), e(3, 2), e(3, 0)}));
    EXPECT_EQ(g.member("zeta2.3-").ket.amplitudes, flat({e(4, 0), e(3, 2), sup(3, 0, 1, -1)}));
}

TEST(Catalog, h_members_match_definitions) {
    auto s = build_h();
    EXPECT_EQ(s.member("0,1,eta+").ket.amplitudes, flat({e(3, 0), e(3, 1), sup(3, 0, 1, 1)}));
    EXPECT_EQ(s.member("kappa-,2,1").ket.amplitudes, flat({sup(3, 0, 2, -1), e(3, 2), e(3, 1)}));
    EXPECT_EQ(s.member("2,2,2").ket.amplitudes, flat({e(3, 2), e(3, 2), e(3, 2)}));
}

TEST(Catalog, h_has_full_rank_27) {
    auto s = build_h();
    Matrix<CScalar> m(27, 27);
    std::vector<std::vector<uint64_t>> mod(27, std::vector<uint64_t>(27));
    for (size_t r = 0; r < 27; r++) {
        for (size_t c = 0; c < 27; c++) {
            m(r, c) = s.members[r].ket.amplitudes[c];
            mod[r][c] = gnps::testing::ModP::from(m(r, c).re());
        }
    }
    EXPECT_EQ(gnps::rank(m), 27u);
    // Rank mod p never exceeds the true rank, so 27 here is a proof.
    EXPECT_EQ(gnps::testing::dense_rank_mod_p(mod), 27u);
}

TEST(Catalog, sigma_bob2_labels_start_at_one) {
    auto s = build_sigma();
    EXPECT_EQ(s.layout.party(2).labels.front(), "1");
    EXPECT_EQ(s.layout.party(2).labels.back(), "5");
    EXPECT_EQ(s.layout.party(0).dim, 6u);
}

TEST(Catalog, h_prime_is_a_subset_of_h) {
    auto h_set = build_h();
    for (const auto &m : build_h_prime().members) {
        EXPECT_EQ(h_set.member(m.label).ket.amplitudes, m.ket.amplitudes) << m.label;
    }
}

TEST(Catalog, restrict_and_union) {
    auto g = build_g3();
    auto a = restrict_members(g, {"zeta0+", "zeta0-"}, "a");
    auto b = restrict_members(g, {"zeta1.1+"}, "b");
    auto u = union_orthogonal(a, b);
    EXPECT_EQ(u.size(), 3u);
    EXPECT_THROW(union_orthogonal(a, a), InvariantError);
    EXPECT_THROW(restrict_members(g, {"nope"}, "x"), InvariantError);
}

TEST(Catalog, append_and_contract_fixed_factors_round_trip) {
    auto s = build_s_ben();
    std::vector<FixedFactor> fixed{{"c", {CScalar(0), CScalar(1)}, "C"}, {"a2", {h(), h()}, "A"}};
    auto big = append_fixed_local(s, fixed);
    EXPECT_EQ(big.layout.size(), 3u);
    EXPECT_EQ(big.layout.party(0).dim, 6u);
    EXPECT_NO_THROW(big.verify());
    auto back = contract_fixed_local(big, s.layout, fixed);
    ASSERT_EQ(back.size(), s.size());
    for (size_t k = 0; k < s.size(); k++) {
        EXPECT_EQ(back.members[k].ket.amplitudes, s.members[k].ket.amplitudes);
    }
}

TEST(Catalog, unknown_name) { EXPECT_THROW(build_catalog_set("nope"), std::invalid_argument); }
