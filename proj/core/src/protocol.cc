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

#include <map>

namespace gnps {

NodePtr ProtocolNode::make_leaf(LeafAction a) {
    auto n = std::make_shared<ProtocolNode>();
    n->leaf = std::move(a);
    return n;
}

NodePtr ProtocolNode::measure(std::string actor, std::vector<Branch> branches) {
    auto n = std::make_shared<ProtocolNode>();
    n->actor = std::move(actor);
    n->branches = std::move(branches);
    return n;
}

std::string to_string(ValidationIssue::Kind k) {
    switch (k) {
        case ValidationIssue::Kind::incomplete_measurement:
            return "incomplete-measurement";
        case ValidationIssue::Kind::nonlocal_operator:
            return "nonlocal-operator";
        case ValidationIssue::Kind::dangling_label:
            return "dangling-label";
        case ValidationIssue::Kind::dimension_mismatch:
            return "dimension-mismatch";
        case ValidationIssue::Kind::unknown_actor:
            return "unknown-actor";
        case ValidationIssue::Kind::missing_child:
            return "missing-child";
    }
    return "unknown";
}

PartyLayout combined_layout(const StateSet &set, const Resource &resource) {
    const auto &sys = set.layout;
    const auto &res = resource.layout;
    if (sys.size() != res.size()) {
        throw LayoutError("resource '" + resource.name + "' has " + std::to_string(res.size()) +
                          " parties, set '" + set.name + "' has " + std::to_string(sys.size()));
    }
    std::vector<std::vector<size_t>> anc;
    for (size_t p = 0; p < sys.size(); p++) {
        if (sys.party(p).name != res.party(p).name) {
            throw LayoutError("party " + std::to_string(p) + " is '" + sys.party(p).name + "' in the set but '" +
                              res.party(p).name + "' in the resource");
        }
        anc.push_back(res.party(p).ancilla);
    }
    return sys.with_ancillas(anc);
}

namespace {

void check_leaf(const LeafAction &a, const StateSet *set, const std::string &path, ValidationReport &r) {
    if (set == nullptr) {
        return;
    }
    auto need = [&](const std::string &label) {
        if (!set->find(label)) {
            r.issues.push_back({ValidationIssue::Kind::dangling_label, path,
                                "label '" + label + "' is not a member of " + set->name});
        }
    };
    switch (a.kind) {
        case LeafAction::Kind::declare:
            need(a.label);
            break;
        case LeafAction::Kind::pair_readout:
            need(a.label);
            need(a.minus_label);
            break;
        case LeafAction::Kind::reject:
            break;
    }
}

void validate_rec(const ProtocolNode &node, const PartyLayout &layout, const StateSet *set, const std::string &path,
                  ValidationReport &r) {
    using K = ValidationIssue::Kind;
    if (node.is_leaf()) {
        r.leaves++;
        check_leaf(*node.leaf, set, path, r);
        return;
    }
    r.measurement_nodes++;
    if (!layout.contains(node.actor)) {
        r.issues.push_back({K::unknown_actor, path, "actor '" + node.actor + "' is not a party"});
        return;
    }
    for (const auto &name : node.acts_on) {
        if (name != node.actor) {
            r.issues.push_back({K::nonlocal_operator, path,
                                "operators of '" + node.actor + "' also act on party '" + name + "'"});
        }
    }
    size_t dim = layout.party(layout.index_of(node.actor)).local_dim();
    bool dims_ok = true;
    for (const auto &b : node.branches) {
        if (b.op.rows() != dim || b.op.cols() != dim) {
            dims_ok = false;
            r.issues.push_back({K::dimension_mismatch, path + "/" + b.outcome,
                                "operator is " + std::to_string(b.op.rows()) + "x" + std::to_string(b.op.cols()) +
                                    ", actor local space has dimension " + std::to_string(dim)});
        }
    }
    if (dims_ok) {
        // sum_k M_k^dagger M_k accumulated row by row over nonzero entries.
        std::map<std::pair<size_t, size_t>, CScalar> sum;
        for (const auto &b : node.branches) {
            for (size_t r = 0; r < dim; r++) {
                std::vector<size_t> nz;
                for (size_t c = 0; c < dim; c++) {
                    if (!b.op(r, c).is_zero()) {
                        nz.push_back(c);
                    }
                }
                for (size_t i : nz) {
                    CScalar ci = b.op(r, i).conj();
                    for (size_t j : nz) {
                        sum[{i, j}] += ci * b.op(r, j);
                    }
                }
            }
        }
        bool identity = true;
        for (size_t i = 0; i < dim && identity; i++) {
            auto it = sum.find({i, i});
            identity = it != sum.end() && it->second == CScalar(1);
        }
        for (const auto &[ij, v] : sum) {
            if (ij.first != ij.second && !v.is_zero()) {
                identity = false;
            }
        }
        if (!identity) {
            r.issues.push_back({K::incomplete_measurement, path,
                                "sum of M^dagger M over " + std::to_string(node.branches.size()) +
                                    " outcomes is not the identity"});
        }
    }
    for (const auto &b : node.branches) {
        std::string child_path = path + "/" + b.outcome;
        if (!b.child) {
            r.issues.push_back({K::missing_child, child_path, "outcome has no subtree"});
            continue;
        }
        validate_rec(*b.child, layout, set, child_path, r);
    }
}

}  // namespace

ValidationReport validate_node(const ProtocolNode &node, const PartyLayout &layout, const StateSet *set,
                               const std::string &path) {
    ValidationReport r;
    validate_rec(node, layout, set, path, r);
    return r;
}

ValidationReport validate(const ProtocolTree &p, const StateSet &set, const Resource &resource) {
    if (!p.root) {
        ValidationReport r;
        r.issues.push_back({ValidationIssue::Kind::missing_child, "root", "protocol has no root"});
        return r;
    }
    return validate_node(*p.root, combined_layout(set, resource), &set);
}

NodePtr transform_operators(const ProtocolNode &node,
                            const std::function<ExactMatrix(const std::string &, const ExactMatrix &)> &f) {
    auto out = std::make_shared<ProtocolNode>();
    out->leaf = node.leaf;
    out->actor = node.actor;
    out->acts_on = node.acts_on;
    for (const auto &b : node.branches) {
        out->branches.push_back({b.outcome, f(node.actor, b.op), b.child ? transform_operators(*b.child, f) : nullptr});
    }
    return out;
}

void visit_nodes(const ProtocolNode &node, const std::function<void(const ProtocolNode &, const std::string &)> &f,
                 const std::string &path) {
    f(node, path);
    for (const auto &b : node.branches) {
        if (b.child) {
            visit_nodes(*b.child, f, path + "/" + b.outcome);
        }
    }
}

}  // namespace gnps
