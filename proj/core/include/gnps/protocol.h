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


#ifndef GNPS_PROTOCOL_H
#define GNPS_PROTOCOL_H

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gnps/layout.h"
#include "gnps/matrix.h"
#include "gnps/model.h"

namespace gnps {

struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Terminal action of a protocol branch.
struct LeafAction {
    enum class Kind { declare, pair_readout, reject };

    Kind kind = Kind::reject;
    /// Declared label, or the "+" label of a readout pair.
    std::string label;
    /// The "-" label of a readout pair.
    std::string minus_label;

    static LeafAction declare(std::string label) { return {Kind::declare, std::move(label), {}}; }
    static LeafAction pair(std::string plus, std::string minus) {
        return {Kind::pair_readout, std::move(plus), std::move(minus)};
    }
    static LeafAction reject() { return {}; }
};

struct ProtocolNode;
using NodePtr = std::shared_ptr<ProtocolNode>;

/// One measurement outcome: its Kraus operator on the actor's local space
/// (system then ancilla, local index sys * ancilla_dim + anc) and the subtree
/// that follows it.
struct Branch {
    std::string outcome;
    ExactMatrix op;
    NodePtr child;
};

/// Either a leaf or a measurement performed by a single party.
struct ProtocolNode {
    std::optional<LeafAction> leaf;
    std::string actor;
    /// Parties the operators claim to touch. Empty means {actor}; any other
    /// party makes the node nonlocal.
    std::vector<std::string> acts_on;
    std::vector<Branch> branches;

    bool is_leaf() const { return leaf.has_value(); }

    static NodePtr make_leaf(LeafAction a);
    static NodePtr measure(std::string actor, std::vector<Branch> branches);
};

struct ProtocolTree {
    std::string name;
    std::string set_ref;
    std::string resource_ref;
    NodePtr root;
};

struct ValidationIssue {
    enum class Kind { incomplete_measurement, nonlocal_operator, dangling_label, dimension_mismatch, unknown_actor, missing_child };

    Kind kind;
    /// Outcome labels from the root joined by '/', starting with "root".
    std::string path;
    std::string message;
};

std::string to_string(ValidationIssue::Kind k);

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    size_t measurement_nodes = 0;
    size_t leaves = 0;

    bool ok() const { return issues.empty(); }
};

/// Checks completeness (sum of M^dagger M equals identity exactly), operator
/// dimensions against the actor's local space in `layout`, locality, missing
/// children and leaf labels against `set` (skipped when null).
ValidationReport validate_node(const ProtocolNode &node, const PartyLayout &layout, const StateSet *set,
                               const std::string &path = "root");
ValidationReport validate(const ProtocolTree &p, const StateSet &set, const Resource &resource);

/// Layout of set members with the resource's ancilla factors attached.
PartyLayout combined_layout(const StateSet &set, const Resource &resource);

/// Deep copy with every operator replaced by f(actor, op).
NodePtr transform_operators(const ProtocolNode &node,
                            const std::function<ExactMatrix(const std::string &, const ExactMatrix &)> &f);

/// Calls f on every node in depth-first order with its path.
void visit_nodes(const ProtocolNode &node, const std::function<void(const ProtocolNode &, const std::string &)> &f,
                 const std::string &path = "root");

}  // namespace gnps

#endif
