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


#include "gnps/protocol.h"

#include <gtest/gtest.h>

#include "gnps/catalog.h"
#include "gnps/protocols.h"
#include "gnps/resources.h"

using namespace gnps;
using Kind = ValidationIssue::Kind;

namespace {

struct Fixture {
    StateSet set = build_g3();
    Resource res = ghz_resource({"A", "B", "C"});
    PartyLayout layout = combined_layout(set, res);
};

bool has_issue(const ValidationReport &r, Kind k) {
    for (const auto &i : r.issues) {
        if (i.kind == k) {
            return true;
        }
    }
    return false;
}

NodePtr two_outcome(const std::string &actor, const ExactMatrix &m, NodePtr a, NodePtr b) {
    return ProtocolNode::measure(actor, {{"0", m, std::move(a)}, {"1", complement({m}), std::move(b)}});
}

}  // namespace

TEST(Protocol, shipped_trees_validate) {
    Fixture f;
    auto t1 = build_theorem1_protocol();
    auto r = validate(t1, f.set, f.res);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.issues[0].message);
    EXPECT_GT(r.measurement_nodes, 0u);
    EXPECT_GT(r.leaves, r.measurement_nodes);
    for (size_t m = 1; m <= 4; m++) {
        auto set = build_g_general(m);
        auto res = ghz_resource(party_names(set.layout));
        EXPECT_TRUE(validate(build_prop3_protocol(m), set, res).ok()) << m;
    }
}

TEST(Protocol, combined_layout_attaches_ancillas) {
    Fixture f;
    EXPECT_EQ(f.layout.party(0).local_dim(), 8u);
    EXPECT_EQ(f.layout.party(1).local_dim(), 6u);
    auto wrong = ghz_resource({"A", "C", "B"});
    EXPECT_THROW(combined_layout(f.set, wrong), LayoutError);
}

TEST(Protocol, incomplete_measurement) {
    Fixture f;
    auto half = block_projector(4, 2, {{{0, 1}, {}}});
    auto node = ProtocolNode::measure("A", {{"0", half, ProtocolNode::make_leaf(LeafAction::reject())}});
    auto r = validate_node(*node, f.layout, &f.set);
    ASSERT_EQ(r.issues.size(), 1u);
    EXPECT_EQ(r.issues[0].kind, Kind::incomplete_measurement);
    EXPECT_EQ(r.issues[0].path, "root");
}

TEST(Protocol, complete_but_non_projective_measurement_is_accepted) {
    Fixture f;
    auto half = ExactMatrix::identity(8);
    for (size_t k = 0; k < 8; k++) {
        half(k, k) = CScalar(QScalar::inv_sqrt2());
    }
    auto leaf = [] { return ProtocolNode::make_leaf(LeafAction::reject()); };
    auto node = ProtocolNode::measure("A", {{"x", half, leaf()}, {"y", half, leaf()}});
    EXPECT_TRUE(validate_node(*node, f.layout, &f.set).ok());
}

TEST(Protocol, nonlocal_operator) {
    Fixture f;
    auto node = two_outcome("A", block_projector(4, 2, {{{0}, {}}}), ProtocolNode::make_leaf(LeafAction::reject()),
                            ProtocolNode::make_leaf(LeafAction::reject()));
    node->acts_on = {"A", "B"};
    EXPECT_TRUE(has_issue(validate_node(*node, f.layout, &f.set), Kind::nonlocal_operator));
}

TEST(Protocol, dangling_labels) {
    Fixture f;
    auto node = two_outcome("B", block_projector(3, 2, {{{0}, {}}}),
                            ProtocolNode::make_leaf(LeafAction::declare("zeta9+")),
                            ProtocolNode::make_leaf(LeafAction::pair("zeta0+", "bogus")));
    auto r = validate_node(*node, f.layout, &f.set);
    ASSERT_EQ(r.issues.size(), 2u);
    EXPECT_EQ(r.issues[0].kind, Kind::dangling_label);
    EXPECT_EQ(r.issues[0].path, "root/0");
    EXPECT_EQ(r.issues[1].path, "root/1");
    // Without a set the labels cannot be checked.
    EXPECT_TRUE(validate_node(*node, f.layout, nullptr).ok());
}

TEST(Protocol, dimension_mismatch) {
    Fixture f;
    auto node = two_outcome("C", block_projector(4, 2, {{{0}, {}}}), ProtocolNode::make_leaf(LeafAction::reject()),
                            ProtocolNode::make_leaf(LeafAction::reject()));
    auto r = validate_node(*node, f.layout, &f.set);
    EXPECT_TRUE(has_issue(r, Kind::dimension_mismatch));
    EXPECT_FALSE(has_issue(r, Kind::incomplete_measurement));
}

TEST(Protocol, unknown_actor_and_missing_child) {
    Fixture f;
    auto ghost = ProtocolNode::measure("D", {});
    EXPECT_TRUE(has_issue(validate_node(*ghost, f.layout, &f.set), Kind::unknown_actor));
    auto node = two_outcome("A", block_projector(4, 2, {{{0}, {}}}), nullptr,
                            ProtocolNode::make_leaf(LeafAction::reject()));
    auto r = validate_node(*node, f.layout, &f.set);
    ASSERT_EQ(r.issues.size(), 1u);
    EXPECT_EQ(r.issues[0].kind, Kind::missing_child);
    EXPECT_EQ(r.issues[0].path, "root/0");
    ProtocolTree empty{"empty", "g3", "g3", nullptr};
    EXPECT_TRUE(has_issue(validate(empty, f.set, f.res), Kind::missing_child));
}

TEST(Protocol, issue_kind_names_are_distinct) {
    std::set<std::string> names;
    for (auto k : {Kind::incomplete_measurement, Kind::nonlocal_operator, Kind::dangling_label, Kind::dimension_mismatch,
                   Kind::unknown_actor, Kind::missing_child}) {
        names.insert(to_string(k));
    }
    EXPECT_EQ(names.size(), 6u);
}

TEST(ProtocolHelpers, block_projector_and_complement) {
    auto p = block_projector(3, 2, {{{0, 2}, {1}}, {{1}, {}}});
    EXPECT_EQ(p * p, p);
    EXPECT_EQ(p.adjoint(), p);
    CScalar trace;
    for (size_t k = 0; k < 6; k++) {
        trace += p(k, k);
    }
    EXPECT_EQ(trace, CScalar(4));
    auto q = complement({p});
    EXPECT_EQ(p + q, ExactMatrix::identity(6));
    EXPECT_EQ(p * q, ExactMatrix(6, 6));
}

TEST(ProtocolHelpers, shift_conjugate_moves_ancilla_values) {
    auto p = block_projector(2, 4, {{{1}, {0}}});
    auto s = shift_conjugate(p, 2, 4, 1);
    EXPECT_EQ(s, block_projector(2, 4, {{{1}, {1}}}));
    EXPECT_EQ(shift_conjugate(p, 2, 4, 4), p);
}

TEST(ProtocolHelpers, basis_measurement_is_complete) {
    Fixture f;
    CScalar h(QScalar::inv_sqrt2());
    std::vector<std::vector<CScalar>> basis{{h, h, CScalar(0), CScalar(0)}, {h, -h, CScalar(0), CScalar(0)}};
    auto node = basis_measurement("A", 2, basis, {"zeta0+", "zeta0-"});
    auto r = validate_node(*node, f.layout, &f.set);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(node->branches.size(), 3u);
}

TEST(ProtocolHelpers, catalog_names) {
    EXPECT_NO_THROW(build_catalog_protocol("theorem1"));
    EXPECT_NO_THROW(build_catalog_protocol("prop3", 3));
    EXPECT_THROW(build_catalog_protocol("nope"), std::invalid_argument);
    EXPECT_FALSE(protocol_catalog().empty());
}
