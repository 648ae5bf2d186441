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


#include "gnps/resources.h"

#include <gtest/gtest.h>

#include "gnps/engine.h"

using namespace gnps;

namespace {
const std::vector<std::string> kABC{"A", "B", "C"};
}

TEST(Resources, ghz_amplitudes) {
    auto g = ghz_resource(kABC);
    EXPECT_EQ(g.name, "g3");
    EXPECT_EQ(g.amplitudes.size(), 8u);
    EXPECT_EQ(g.amplitudes[0], CScalar(QScalar::inv_sqrt2()));
    EXPECT_EQ(g.amplitudes[7], CScalar(QScalar::inv_sqrt2()));
    EXPECT_TRUE(g.as_ket().is_normalized());
    EXPECT_THROW(ghz_resource(kABC, 3), ArithmeticError);
}

TEST(Resources, phi3_has_eight_equal_amplitudes) {
    auto r = phi3_resource(kABC);
    ASSERT_EQ(r.amplitudes.size(), 64u);
    size_t nonzero = 0;
    for (const auto &a : r.amplitudes) {
        if (!a.is_zero()) {
            nonzero++;
            EXPECT_EQ(a, CScalar(QScalar(0, mpq_class(1, 4))));
        }
    }
    EXPECT_EQ(nonzero, 8u);
    for (const auto &p : r.layout.parties()) {
        EXPECT_EQ(p.ancilla, (std::vector<size_t>{2, 2}));
    }
}

TEST(Resources, psi3_equals_ququad_ghz_amplitudes) {
    auto psi = psi3_resource(kABC);
    auto quad = ghz_resource(kABC, 4);
    EXPECT_EQ(psi.amplitudes, quad.amplitudes);
    EXPECT_EQ(merge_ancilla_factors(psi, "merged").layout.party(0).ancilla, (std::vector<size_t>{4}));
}

TEST(Resources, phi3_differs_from_psi3) {
    EXPECT_NE(phi3_resource(kABC).amplitudes, psi3_resource(kABC).amplitudes);
}

TEST(Resources, tensor_then_split_round_trips) {
    auto g = ghz_resource(kABC);
    auto prod = product_resource(kABC, {{2}, {2}, {2}});
    auto joint = tensor_resources(g, prod, "joint");
    SequentialTask t{"t", "G3", 2, {{0}, {1}}};
    auto parts = split_resource(joint, t);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].amplitudes, g.amplitudes);
    EXPECT_EQ(parts[1].amplitudes, prod.amplitudes);
}

TEST(Resources, split_rejects_entangled_rounds_and_bad_partitions) {
    auto phi = phi3_resource(kABC);
    EXPECT_THROW(split_resource(phi, SequentialTask{"t", "G3", 2, {{0}, {1}}}), ProtocolError);
    auto psi = psi3_resource(kABC);
    EXPECT_THROW(split_resource(psi, SequentialTask{"t", "G3", 2, {{0}, {0}}}), ProtocolError);
    EXPECT_THROW(split_resource(psi, SequentialTask{"t", "G3", 2, {{0}, {2}}}), ProtocolError);
}

TEST(Resources, catalog_builds_every_entry) {
    for (const auto &e : resource_catalog()) {
        if (e.name == "phi_plus") {
            EXPECT_NO_THROW(build_resource(e.name, {"A", "B"}));
            EXPECT_THROW(build_resource(e.name, kABC), LayoutError);
            continue;
        }
        auto r = build_resource(e.name, kABC);
        EXPECT_EQ(std::holds_alternative<Resource>(r), e.exact) << e.name;
    }
    EXPECT_THROW(build_resource("nope", kABC), std::invalid_argument);
}

TEST(Resources, weighted_ghz_is_normalized_for_pythagorean_weights) {
    auto r = weighted_ghz_resource(kABC, CScalar(QScalar::ratio(3, 5)), CScalar(QScalar::ratio(4, 5)));
    EXPECT_TRUE(r.as_ket().is_normalized());
}
