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


#include "gnps/oplm.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "gnps/catalog.h"
#include "gnps/engine.h"
#include "gnps/resources.h"
#include "support/oplm_oracle.h"

using namespace gnps;

namespace {

StateSet computational_2x2() {
    auto layout = PartyLayout::systems({{"A", 2}, {"B", 2}});
    StateSet s{"z", layout, {}, ""};
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            std::vector<CScalar> ea(2), eb(2);
            ea[a] = CScalar(1);
            eb[b] = CScalar(1);
            s.members.push_back(product_member<CScalar>(layout, std::to_string(a) + std::to_string(b), {ea, eb}));
        }
    }
    return s;
}

/// <psi_i| E (x) I |psi_j> for a single-party cut, via apply_local.
CScalar sandwich(const StateSet &s, size_t party, const ExactMatrix &e, size_t i, size_t j) {
    auto v = apply_local(s.layout, party, e, to_sparse(s.members[j].ket.amplitudes));
    CScalar acc;
    for (const auto &[k, a] : v) {
        acc += s.members[i].ket.amplitudes[k].conj() * a;
    }
    return acc;
}

void expect_valid_basis(const StateSet &s, const std::string &party) {
    size_t p = s.layout.index_of(party);
    auto r = oplm_space(s, Cut{{party}});
    ASSERT_EQ(r.basis.size(), r.dimension);
    for (const auto &e : r.basis) {
        EXPECT_EQ(e, e.adjoint());
        for (size_t i = 0; i < s.size(); i++) {
            for (size_t j = 0; j < s.size(); j++) {
                if (i != j) {
                    EXPECT_TRUE(sandwich(s, p, e, i, j).is_zero()) << s.name << " " << party;
                }
            }
        }
    }
}

}  // namespace

TEST(Oplm, coordinates_order_and_round_trip) {
    ExactMatrix e(3, 3);
    e(0, 0) = CScalar(1);
    e(1, 1) = CScalar(2);
    e(2, 2) = CScalar(3);
    e(0, 1) = CScalar(QScalar(4), QScalar(5));
    e(1, 0) = e(0, 1).conj();
    e(0, 2) = CScalar(QScalar(6), QScalar(7));
    e(2, 0) = e(0, 2).conj();
    e(1, 2) = CScalar(QScalar(8), QScalar::sqrt2());
    e(2, 1) = e(1, 2).conj();
    auto x = hermitian_coordinates(e);
    std::vector<QScalar> want{1, 2, 3, 4, 5, 6, 7, 8, QScalar::sqrt2()};
    EXPECT_EQ(x, want);
    EXPECT_EQ(hermitian_from_coordinates(x, 3), e);
}

TEST(Oplm, cut_enumeration) {
    auto three = build_g3().layout;
    EXPECT_EQ(enumerate_cuts(three, CutMode::singles).size(), 3u);
    EXPECT_EQ(enumerate_cuts(three, CutMode::leave_one_out).size(), 3u);
    EXPECT_EQ(enumerate_cuts(three, CutMode::standard).size(), 6u);
    EXPECT_EQ(enumerate_cuts(three, CutMode::all).size(), 6u);
    auto two = computational_2x2().layout;
    EXPECT_EQ(enumerate_cuts(two, CutMode::standard).size(), 2u);
    auto four = build_g_general(3).layout;
    EXPECT_EQ(enumerate_cuts(four, CutMode::all).size(), 14u);
    EXPECT_EQ(parse_cut_mode("leave-one-out"), CutMode::leave_one_out);
    EXPECT_THROW(parse_cut_mode("pairs"), std::invalid_argument);
}

TEST(Oplm, library_matches_modular_oracle_on_catalog_sets) {
    std::vector<StateSet> sets{build_s_ben(), build_g3(), build_h(), build_h_prime(), build_g_general(1),
                               computational_2x2()};
    for (const auto &s : sets) {
        for (const auto &cut : enumerate_cuts(s.layout, CutMode::all)) {
            auto r = oplm_space(s, cut);
            if (r.group_dim > 36) {
                continue;
            }
            EXPECT_EQ(r.dimension, gnps::testing::oracle_oplm_dimension(s, cut.group)) << s.name << " " << cut.str();
            EXPECT_EQ(r.rank + r.dimension, r.group_dim * r.group_dim);
            EXPECT_TRUE(r.identity_in_span);
            EXPECT_EQ(r.trivial, r.dimension == 1);
        }
    }
}

TEST(Oplm, product_basis_is_reducible) {
    auto s = computational_2x2();
    auto r = oplm_space(s, Cut{{"A"}});
    EXPECT_EQ(r.dimension, 2u);
    EXPECT_FALSE(r.trivial);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NE(*r.witness, ExactMatrix::identity(2));
    EXPECT_EQ(*r.witness, r.witness->adjoint());
    // The witness is not a multiple of the identity.
    EXPECT_FALSE((*r.witness)(0, 1).is_zero() && (*r.witness)(0, 0) == (*r.witness)(1, 1));
    expect_valid_basis(s, "A");
}

TEST(Oplm, basis_elements_preserve_orthogonality) {
    expect_valid_basis(build_g3(), "A");
    expect_valid_basis(build_g3(), "B");
    expect_valid_basis(build_s_ben(), "A");
    expect_valid_basis(build_h(), "C");
}

TEST(Oplm, h_is_trivial_on_every_standard_cut) {
    auto rep = gnps_evidence(build_h());
    EXPECT_EQ(rep.cuts.size(), 6u);
    EXPECT_TRUE(rep.all_trivial());
    for (const auto &c : rep.cuts) {
        EXPECT_FALSE(c.witness.has_value());
    }
}

TEST(Oplm, dimension_is_invariant_under_member_order) {
    auto s = build_g3();
    auto shuffled = s;
    std::reverse(shuffled.members.begin(), shuffled.members.end());
    std::rotate(shuffled.members.begin(), shuffled.members.begin() + 5, shuffled.members.end());
    for (const auto &cut : enumerate_cuts(s.layout, CutMode::all)) {
        EXPECT_EQ(oplm_space(s, cut).dimension, oplm_space(shuffled, cut).dimension) << cut.str();
    }
}

TEST(Oplm, ancilla_layouts_are_rejected) {
    auto s = build_g3();
    auto a = s;
    a.layout = combined_layout(s, ghz_resource({"A", "B", "C"}));
    EXPECT_THROW(oplm_space(a, Cut{{"A"}}), LayoutError);
}
