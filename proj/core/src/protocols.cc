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


#include "gnps/protocols.h"

#include <bit>

#include "gnps/catalog.h"
#include "gnps/engine.h"

namespace gnps {

ExactMatrix block_projector(size_t sys_dim, size_t anc_dim, const std::vector<ProjectorBlock> &blocks) {
    ExactMatrix m(sys_dim * anc_dim, sys_dim * anc_dim);
    for (const auto &b : blocks) {
        std::vector<size_t> anc = b.anc;
        if (anc.empty()) {
            for (size_t a = 0; a < anc_dim; a++) {
                anc.push_back(a);
            }
        }
        for (size_t s : b.sys) {
            for (size_t a : anc) {
                size_t l = s * anc_dim + a;
                if (!m(l, l).is_zero()) {
                    throw ProtocolError("projector blocks overlap");
                }
                m(l, l) = CScalar(1);
            }
        }
    }
    return m;
}

ExactMatrix complement(const std::vector<ExactMatrix> &ops) {
    ExactMatrix m = ExactMatrix::identity(ops.at(0).rows());
    for (const auto &op : ops) {
        m -= op;
    }
    return m;
}

ExactMatrix shift_conjugate(const ExactMatrix &op, size_t sys_dim, size_t anc_dim, size_t k) {
    size_t n = sys_dim * anc_dim;
    auto move = [&](size_t l) { return (l / anc_dim) * anc_dim + (l % anc_dim + k) % anc_dim; };
    ExactMatrix out(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            if (!op(r, c).is_zero()) {
                out(move(r), move(c)) = op(r, c);
            }
        }
    }
    return out;
}

NodePtr basis_measurement(const std::string &actor, size_t anc_dim, const std::vector<std::vector<CScalar>> &basis,
                          const std::vector<std::string> &labels) {
    ExactMatrix id_anc = ExactMatrix::identity(anc_dim);
    std::vector<Branch> branches;
    std::vector<ExactMatrix> ops;
    for (size_t t = 0; t < basis.size(); t++) {
        ExactMatrix p = kron(ExactMatrix::outer(basis[t], basis[t]), id_anc);
        ops.push_back(p);
        branches.push_back({"e" + std::to_string(t), std::move(p), ProtocolNode::make_leaf(LeafAction::declare(labels[t]))});
    }
    branches.push_back({"rest", complement(ops), ProtocolNode::make_leaf(LeafAction::reject())});
    return ProtocolNode::measure(actor, std::move(branches));
}

namespace {

NodePtr pair_leaf(const std::string &base) {
    return ProtocolNode::make_leaf(LeafAction::pair(base + "+", base + "-"));
}

NodePtr two_way(const std::string &actor, const std::string &name, ExactMatrix op, NodePtr yes, NodePtr no) {
    ExactMatrix rest = complement({op});
    return ProtocolNode::measure(actor, {{name, std::move(op), std::move(yes)}, {"I-" + name, std::move(rest), std::move(no)}});
}

/// Copies of `branch` conjugated by the ancilla shift X^k, one per k, as
/// the children of the root operators shift^k(root_op).
NodePtr shift_family(const std::string &actor, const std::string &prefix, const ExactMatrix &root_op,
                     const NodePtr &branch, const std::map<std::string, size_t> &sys_dims, size_t anc_dim,
                     size_t copies) {
    std::vector<Branch> out;
    for (size_t k = 0; k < copies; k++) {
        NodePtr child = k == 0 ? branch
                               : transform_operators(*branch, [&](const std::string &who, const ExactMatrix &op) {
                                     return shift_conjugate(op, sys_dims.at(who), anc_dim, k);
                                 });
        out.push_back({prefix + std::to_string(k + 1), shift_conjugate(root_op, sys_dims.at(actor), anc_dim, k), child});
    }
    return ProtocolNode::measure(actor, std::move(out));
}

ProtocolTree prop3_impl(size_t m, const std::vector<std::string> &names, std::string name, std::string set_ref,
                        std::string resource_ref) {
    constexpr size_t ad = 2;
    size_t da = m + 2;
    const std::string &alice = names[0];

    // Alice's last step: which Bob (if any) still holds a superposition.
    std::vector<Branch> last;
    std::vector<ExactMatrix> used;
    for (size_t i = 1; i <= m; i++) {
        ExactMatrix op = block_projector(da, ad, {{{i + 1}, {}}});
        used.push_back(op);
        last.push_back({"P" + std::to_string(i), std::move(op), pair_leaf("zeta" + std::to_string(i) + ".1")});
    }
    last.push_back({"rest", complement(used), pair_leaf("zeta0")});
    NodePtr next = ProtocolNode::measure(alice, std::move(last));

    for (size_t i = m; i >= 1; i--) {
        std::string z = "zeta" + std::to_string(i) + ".";
        ExactMatrix k3 = block_projector(3, ad, {{{0, 1}, {0}}});
        ExactMatrix k2 = block_projector(3, ad, {{{0}, {1}}});
        ExactMatrix k1 = complement({k3, k2});
        next = ProtocolNode::measure(names[i], {{"K3", k3, pair_leaf(z + "3")}, {"K2", k2, pair_leaf(z + "2")}, {"K1", k1, next}});
    }

    std::vector<size_t> rest_levels;
    for (size_t l = 1; l < da; l++) {
        rest_levels.push_back(l);
    }
    ExactMatrix m_op = block_projector(da, ad, {{{0}, {0}}, {rest_levels, {1}}});
    std::map<std::string, size_t> dims{{alice, da}};
    for (size_t i = 1; i <= m; i++) {
        dims[names[i]] = 3;
    }
    NodePtr root = shift_family(alice, "M", m_op, next, dims, ad, 2);
    return {std::move(name), std::move(set_ref), std::move(resource_ref), root};
}

/// Sylvester-Hadamard vector h_o(c) = (-1)^popcount(o & c) / 2 on four levels.
std::vector<CScalar> hadamard4(size_t o) {
    std::vector<CScalar> v;
    for (size_t c = 0; c < 4; c++) {
        QScalar h = QScalar::ratio(std::popcount(o & c) % 2 ? -1 : 1, 2);
        v.emplace_back(h);
    }
    return v;
}

/// The A-system state of each family member is correlated with the GHZ
/// ancilla through `tag` (A level -> ancilla value). Each party measures its
/// ancilla in the Hadamard basis; the outcomes' XOR x leaves the phases
/// (-1)^popcount(x & tag(l)) on A, which Alice then undoes in her basis.
NodePtr disentangle(const std::vector<std::vector<CScalar>> &family, const std::vector<std::string> &labels,
                    const std::vector<size_t> &tag) {
    constexpr size_t ad = 4;
    // Kraus operator |0><h_o|: read the ancilla out and reset it, which keeps
    // the residuals as sparse as the inputs.
    const std::vector<CScalar> reset{CScalar(1), CScalar(), CScalar(), CScalar()};
    auto anc_meas = [&](size_t sys_dim, size_t o) {
        return kron(ExactMatrix::identity(sys_dim), ExactMatrix::outer(reset, hadamard4(o)));
    };
    std::vector<Branch> b1;
    for (size_t o1 = 0; o1 < 4; o1++) {
        std::vector<Branch> b2;
        for (size_t o2 = 0; o2 < 4; o2++) {
            std::vector<Branch> a;
            for (size_t o3 = 0; o3 < 4; o3++) {
                size_t x = o1 ^ o2 ^ o3;
                std::vector<std::vector<CScalar>> basis;
                for (const auto &v : family) {
                    auto w = v;
                    for (size_t l = 0; l < w.size(); l++) {
                        if (std::popcount(x & tag[l]) % 2) {
                            w[l] = -w[l];
                        }
                    }
                    basis.push_back(std::move(w));
                }
                a.push_back({"h" + std::to_string(o3), anc_meas(6, o3), basis_measurement("A", ad, basis, labels)});
            }
            b2.push_back({"h" + std::to_string(o2), anc_meas(5, o2), ProtocolNode::measure("A", std::move(a))});
        }
        b1.push_back({"h" + std::to_string(o1), anc_meas(5, o1), ProtocolNode::measure("B2", std::move(b2))});
    }
    return ProtocolNode::measure("B1", std::move(b1));
}

struct QuadFamily {
    std::vector<std::vector<CScalar>> vectors;
    std::vector<std::string> labels;
};

QuadFamily quad_family(const std::string &base, std::array<size_t, 4> levels, size_t dim) {
    QuadFamily f;
    for (auto t : QuadSuperposition::sign_triples()) {
        QuadSuperposition q{levels, t};
        f.vectors.push_back(q.vector(dim));
        f.labels.push_back(base + q.suffix());
    }
    return f;
}

}  // namespace

ProtocolTree build_prop3_protocol(size_t m) {
    if (m == 0) {
        throw std::invalid_argument("prop3 protocol needs m >= 1");
    }
    std::vector<std::string> names{"A"};
    for (size_t k = 1; k <= m; k++) {
        names.push_back("B" + std::to_string(k));
    }
    std::string res = m == 1 ? "phi+" : "g" + std::to_string(m + 1);
    return prop3_impl(m, names, "prop3_m" + std::to_string(m), "G" + std::to_string(m + 1), res);
}

ProtocolTree build_theorem1_protocol() {
    return prop3_impl(2, {"A", "B", "C"}, "theorem1", "G3", "g3");
}

ProtocolTree build_prop5_protocol() {
    constexpr size_t ad = 4;
    auto pa = [](std::vector<ProjectorBlock> b) { return block_projector(6, ad, b); };
    auto pb = [](std::vector<ProjectorBlock> b) { return block_projector(5, ad, b); };

    // Ancilla value tagged to each A level by the first root outcome.
    const std::vector<size_t> tag{0, 1, 1, 2, 3, 0};

    auto psi_a = quad_family("Omega9", {0, 1, 2, 3}, 6);
    auto phi_a = quad_family("Omega11", {1, 2, 3, 4}, 6);
    auto ups_a = quad_family("Omega13", {1, 2, 4, 5}, 6);
    auto psi_b1 = quad_family("Omega8", {0, 1, 2, 3}, 5);
    auto phi_b1 = quad_family("Omega10", {1, 2, 3, 4}, 5);
    auto phi_b2 = quad_family("Omega12", {0, 1, 2, 3}, 5);
    auto ups_b2 = quad_family("Omega14", {0, 1, 3, 4}, 5);

    // Bob-2 after K4 clicks.
    NodePtr n1 = ProtocolNode::measure(
        "B2", {{"N1", pb({{{1, 3}, {3}}}), pair_leaf("Omega5")},
               {"N2", pb({{{2}, {3}}}), basis_measurement("B1", ad, phi_b1.vectors, phi_b1.labels)},
               {"N3", pb({{{3}, {1}}}), pair_leaf("Omega2")},
               {"N4", complement({pb({{{1, 3}, {3}}}), pb({{{2}, {3}}}), pb({{{3}, {1}}})}),
                two_way("A", "P1", pa({{{1}, {}}}), pair_leaf("Omega7"), pair_leaf("Omega6"))}});
    // Bob-2 after K4 fails.
    NodePtr n2 = ProtocolNode::measure(
        "B2", {{"N1", pb({{{0, 1, 3, 4}, {2}}}), basis_measurement("B2", ad, ups_b2.vectors, ups_b2.labels)},
               {"N2", pb({{{0, 1, 2, 3}, {0}}}),
                two_way("A", "P0", pa({{{0}, {}}}), basis_measurement("B1", ad, psi_b1.vectors, psi_b1.labels),
                        basis_measurement("B2", ad, phi_b2.vectors, phi_b2.labels))},
               {"N3", complement({pb({{{0, 1, 3, 4}, {2}}}), pb({{{0, 1, 2, 3}, {0}}})}),
                two_way("B2", "P3", pb({{{2}, {}}}), disentangle(phi_a.vectors, phi_a.labels, tag),
                        disentangle(ups_a.vectors, ups_a.labels, tag))}});

    NodePtr k4 = two_way("B1", "K4", pb({{{1, 2, 3, 4}, {1, 2, 3}}}), n1, n2);
    NodePtr k3 = two_way("B1", "K3", pb({{{4}, {0, 1, 2}}}), disentangle(psi_a.vectors, psi_a.labels, tag), k4);
    NodePtr k2 = two_way("B1", "K2", pb({{{1, 2}, {1, 2}}}),
                         two_way("A", "P1", pa({{{1}, {}}}), pair_leaf("Omega1"), pair_leaf("Omega4")), k3);
    NodePtr k1 = two_way("B1", "K1", pb({{{2, 3}, {2}}}), pair_leaf("Omega3"), k2);

    ExactMatrix m1 = pa({{{0, 5}, {0}}, {{1, 2}, {1}}, {{3}, {2}}, {{4}, {3}}});
    NodePtr root = shift_family("A", "M", m1, k1, {{"A", 6}, {"B1", 5}, {"B2", 5}}, ad, 4);
    return {"prop5", "Sigma", "g(4)", root};
}

const std::vector<ProtocolCatalogEntry> &protocol_catalog() {
    static const std::vector<ProtocolCatalogEntry> entries{
        {"theorem1", "G3 with the three-qubit GHZ state"},
        {"prop3", "G_{m+1} with |g_{m+1}> (needs --m)"},
        {"prop5", "Sigma with the ququad GHZ state or two GHZ copies"},
    };
    return entries;
}

ProtocolTree build_catalog_protocol(const std::string &name, size_t m) {
    if (name == "theorem1") return build_theorem1_protocol();
    if (name == "prop3") return build_prop3_protocol(m);
    if (name == "prop5") return build_prop5_protocol();
    throw std::invalid_argument("unknown protocol '" + name + "'");
}

NodePtr build_twistbreak_L1() {
    // Bob-1's local index is sys * 4 + 2 * b1 + b1'.
    ExactMatrix m(20, 20);
    for (size_t s = 0; s < 5; s++) {
        size_t b1 = s == 0 ? 0 : 1;
        for (size_t bp = 0; bp < 2; bp++) {
            size_t l = s * 4 + 2 * b1 + bp;
            m(l, l) = CScalar(1);
        }
    }
    return two_way("B1", "ML1", m, ProtocolNode::make_leaf(LeafAction::reject()),
                   ProtocolNode::make_leaf(LeafAction::reject()));
}

std::vector<std::string> sigma_inner_layer_labels() {
    std::vector<std::string> out;
    for (int k = 1; k <= 4; k++) {
        out.push_back("Omega" + std::to_string(k) + "+");
        out.push_back("Omega" + std::to_string(k) + "-");
    }
    return out;
}

TwistBreakAnalysis analyze_twistbreak(const StateSet &set, const Resource &resource,
                                      const std::vector<std::string> &members) {
    NodePtr node = build_twistbreak_L1();
    PartyLayout layout = combined_layout(set, resource);
    size_t b1 = layout.index_of("B1");
    const auto &shape = layout.party(b1).ancilla;
    if (shape.empty()) {
        throw LayoutError("B1 holds no ancilla");
    }
    size_t inner = layout.party(b1).ancilla_dim() / shape[0];
    TwistBreakAnalysis out;
    std::set<std::string> wanted(members.begin(), members.end());
    for (const auto &r : leaf_residuals(*node, set, resource)) {
        if (!wanted.count(r.label)) {
            continue;
        }
        std::string outcome = r.path.substr(r.path.rfind('/') + 1);
        auto &digits = out.tags[outcome][r.label];
        for (const auto &[g, x] : r.state) {
            digits.insert(layout.ancilla_digit(g, b1) / inner);
        }
    }
    out.constant_tag = !out.tags.empty();
    for (const auto &[outcome, per_member] : out.tags) {
        std::set<size_t> all;
        for (const auto &[label, digits] : per_member) {
            all.insert(digits.begin(), digits.end());
        }
        if (all.size() != 1) {
            out.constant_tag = false;
        }
    }
    return out;
}

}  // namespace gnps
