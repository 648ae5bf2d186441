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


#include "gnps/io.h"

#include <fstream>

namespace gnps {

Json to_json(const QScalar &x) { return x.str(); }

Json to_json(const CScalar &x) {
    if (x.is_real()) {
        return x.re().str();
    }
    return Json::array({x.re().str(), x.im().str()});
}

Json to_json(const FScalar &x) {
    if (x.imag() == 0.0) {
        return x.real();
    }
    return Json::array({x.real(), x.imag()});
}

Json real_to_json(double x) { return x; }

static QScalar exact_real(const Json &j) {
    if (j.is_string()) {
        try {
            return QScalar::parse(j.get<std::string>());
        } catch (const ParseError &e) {
            throw FormatError(e.what());
        }
    }
    if (j.is_number_integer()) {
        return QScalar(j.get<long>());
    }
    throw FormatError("exact scalar must be a string in the a+b*sqrt2 grammar, got " + j.dump());
}

CScalar exact_scalar_from_json(const Json &j) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw FormatError("complex scalar must be [re, im]");
        }
        return CScalar(exact_real(j[0]), exact_real(j[1]));
    }
    return CScalar(exact_real(j));
}

static double float_real(const Json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return exact_real(j).to_double();
    }
    throw FormatError("float scalar must be a number, got " + j.dump());
}

FScalar float_scalar_from_json(const Json &j) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw FormatError("complex scalar must be [re, im]");
        }
        return {float_real(j[0]), float_real(j[1])};
    }
    return {float_real(j), 0.0};
}

Json to_json(const PartyLayout &layout) {
    Json out = Json::array();
    for (const auto &p : layout.parties()) {
        Json e{{"party", p.name}, {"dim", p.dim}};
        if (!p.labels.empty()) {
            e["labels"] = p.labels;
        }
        if (!p.ancilla.empty()) {
            e["ancilla"] = p.ancilla;
        }
        out.push_back(std::move(e));
    }
    return out;
}

template <class T>
static T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    }
}

template <class T>
static T field_or(const Json &j, const char *key, T fallback) {
    return j.contains(key) ? field<T>(j, key) : fallback;
}

PartyLayout layout_from_json(const Json &j) {
    if (!j.is_array()) {
        throw FormatError("layout must be an array of parties");
    }
    std::vector<Party> parties;
    for (const auto &e : j) {
        Party p;
        p.name = field<std::string>(e, "party");
        p.dim = field_or<size_t>(e, "dim", 1);
        p.labels = field_or<std::vector<std::string>>(e, "labels", {});
        p.ancilla = field_or<std::vector<size_t>>(e, "ancilla", {});
        if (!p.labels.empty() && p.labels.size() != p.dim) {
            throw FormatError("party '" + p.name + "' has " + std::to_string(p.labels.size()) +
                              " labels for dimension " + std::to_string(p.dim));
        }
        parties.push_back(std::move(p));
    }
    try {
        return PartyLayout(std::move(parties));
    } catch (const LayoutError &e) {
        throw FormatError(e.what());
    }
}

Json to_json(const ExactMatrix &m) {
    Json entries = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (!m(r, c).is_zero()) {
                entries.push_back(Json::array({r, c, to_json(m(r, c))}));
            }
        }
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ExactMatrix matrix_from_json(const Json &j) {
    if (j.is_array()) {
        size_t rows = j.size();
        size_t cols = rows == 0 ? 0 : j[0].size();
        ExactMatrix m(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            if (!j[r].is_array() || j[r].size() != cols) {
                throw FormatError("dense matrix rows must have equal length");
            }
            for (size_t c = 0; c < cols; c++) {
                m(r, c) = exact_scalar_from_json(j[r][c]);
            }
        }
        return m;
    }
    auto rows = field<size_t>(j, "rows");
    auto cols = field<size_t>(j, "cols");
    ExactMatrix m(rows, cols);
    for (const auto &e : field<Json>(j, "entries")) {
        if (!e.is_array() || e.size() != 3) {
            throw FormatError("matrix entry must be [row, col, scalar]");
        }
        auto r = e[0].get<size_t>();
        auto c = e[1].get<size_t>();
        if (r >= rows || c >= cols) {
            throw FormatError("matrix entry out of range");
        }
        m(r, c) = exact_scalar_from_json(e[2]);
    }
    return m;
}

template <class S>
static Json sparse_entries(const std::vector<S> &amps) {
    Json out = Json::array();
    for (size_t k = 0; k < amps.size(); k++) {
        if (!is_zero(amps[k])) {
            out.push_back(Json::array({k, to_json(amps[k])}));
        }
    }
    return out;
}

template <class S, class Parse>
static std::vector<S> amplitudes_from_json(const Json &j, size_t dim, Parse parse) {
    std::vector<S> amps(dim);
    if (j.contains("amplitudes")) {
        const auto &a = j.at("amplitudes");
        if (!a.is_array() || a.size() != dim) {
            throw FormatError("amplitudes must list " + std::to_string(dim) + " scalars");
        }
        for (size_t k = 0; k < dim; k++) {
            amps[k] = parse(a[k]);
        }
        return amps;
    }
    for (const auto &e : field<Json>(j, "entries")) {
        if (!e.is_array() || e.size() != 2) {
            throw FormatError("amplitude entry must be [index, scalar]");
        }
        auto k = e[0].get<size_t>();
        if (k >= dim) {
            throw FormatError("amplitude index out of range");
        }
        amps[k] = parse(e[1]);
    }
    return amps;
}

Json to_json(const StateSet &set) {
    Json members = Json::array();
    for (const auto &m : set.members) {
        Json e{{"label", m.label}};
        if (m.is_product()) {
            Json locals = Json::array();
            for (const auto &v : m.locals) {
                Json local = Json::array();
                for (const auto &x : v) {
                    local.push_back(to_json(x));
                }
                locals.push_back(std::move(local));
            }
            e["locals"] = std::move(locals);
        } else {
            e["entries"] = sparse_entries(m.ket.amplitudes);
        }
        members.push_back(std::move(e));
    }
    Json out{{"name", set.name}, {"layout", to_json(set.layout)}, {"members", std::move(members)}};
    if (!set.status_note.empty()) {
        out["note"] = set.status_note;
    }
    return out;
}

StateSet state_set_from_json(const Json &j) {
    StateSet set;
    set.name = field<std::string>(j, "name");
    set.layout = layout_from_json(field<Json>(j, "layout"));
    set.status_note = field_or<std::string>(j, "note", "");
    if (set.layout.has_ancilla()) {
        throw FormatError("state set layout must not declare ancillas");
    }
    for (const auto &e : field<Json>(j, "members")) {
        auto label = field<std::string>(e, "label");
        if (e.contains("locals")) {
            const auto &locals = e.at("locals");
            if (!locals.is_array() || locals.size() != set.layout.size()) {
                throw FormatError("member '" + label + "' needs one local vector per party");
            }
            std::vector<std::vector<CScalar>> vs;
            for (size_t p = 0; p < locals.size(); p++) {
                if (!locals[p].is_array() || locals[p].size() != set.layout.party(p).dim) {
                    throw FormatError("member '" + label + "' local vector " + std::to_string(p) +
                                      " has the wrong dimension");
                }
                std::vector<CScalar> v;
                for (const auto &x : locals[p]) {
                    v.push_back(exact_scalar_from_json(x));
                }
                vs.push_back(std::move(v));
            }
            set.members.push_back(product_member<CScalar>(set.layout, label, std::move(vs)));
        } else {
            Member<CScalar> m;
            m.label = label;
            m.ket = ExactKet(set.layout, amplitudes_from_json<CScalar>(e, set.layout.total_dim(),
                                                                        exact_scalar_from_json));
            set.members.push_back(std::move(m));
        }
    }
    return set;
}

template <class S>
static Json resource_json(const ResourceT<S> &r) {
    Json layout = Json::array();
    for (const auto &p : r.layout.parties()) {
        layout.push_back(Json{{"party", p.name}, {"ancilla", p.ancilla}});
    }
    return Json{{"name", r.name},
                {"note", r.note},
                {"float", !is_exact_v<S>},
                {"layout", std::move(layout)},
                {"dim", r.amplitudes.size()},
                {"entries", sparse_entries(r.amplitudes)}};
}

Json to_json(const Resource &r) { return resource_json(r); }
Json to_json(const FloatResource &r) { return resource_json(r); }
Json to_json(const AnyResource &r) {
    return std::visit([](const auto &x) { return to_json(x); }, r);
}

AnyResource resource_from_json(const Json &j) {
    PartyLayout layout = layout_from_json(field<Json>(j, "layout"));
    if (layout.system_dim() != 1) {
        throw FormatError("resource parties must have system dimension 1");
    }
    auto name = field<std::string>(j, "name");
    auto note = field_or<std::string>(j, "note", "");
    size_t dim = layout.total_dim();
    if (field_or<bool>(j, "float", false)) {
        FloatResource r{name, layout, amplitudes_from_json<FScalar>(j, dim, float_scalar_from_json), note};
        return r;
    }
    Resource r{name, layout, amplitudes_from_json<CScalar>(j, dim, exact_scalar_from_json), note};
    return r;
}

Json to_json(const LeafAction &a) {
    switch (a.kind) {
        case LeafAction::Kind::declare:
            return Json{{"kind", "declare"}, {"label", a.label}};
        case LeafAction::Kind::pair_readout:
            return Json{{"kind", "pair_readout"}, {"plus", a.label}, {"minus", a.minus_label}};
        case LeafAction::Kind::reject:
            break;
    }
    return Json{{"kind", "reject"}};
}

Json to_json(const ProtocolNode &node) {
    if (node.is_leaf()) {
        return Json{{"leaf", to_json(*node.leaf)}};
    }
    Json ops = Json::array();
    Json children = Json::object();
    for (const auto &b : node.branches) {
        ops.push_back(Json{{"outcome", b.outcome}, {"matrix", to_json(b.op)}});
        if (b.child) {
            children[b.outcome] = to_json(*b.child);
        }
    }
    Json out{{"actor", node.actor}, {"operators", std::move(ops)}, {"children", std::move(children)}};
    if (!node.acts_on.empty()) {
        out["acts_on"] = node.acts_on;
    }
    return out;
}

Json to_json(const ProtocolTree &p) {
    return Json{{"name", p.name}, {"set_ref", p.set_ref}, {"resource_ref", p.resource_ref}, {"root", to_json(*p.root)}};
}

static LeafAction leaf_from_json(const Json &j) {
    auto kind = field<std::string>(j, "kind");
    if (kind == "declare") {
        return LeafAction::declare(field<std::string>(j, "label"));
    }
    if (kind == "pair_readout") {
        return LeafAction::pair(field<std::string>(j, "plus"), field<std::string>(j, "minus"));
    }
    if (kind == "reject") {
        return LeafAction::reject();
    }
    throw FormatError("unknown leaf kind '" + kind + "'");
}

NodePtr node_from_json(const Json &j) {
    if (j.contains("leaf")) {
        return ProtocolNode::make_leaf(leaf_from_json(j.at("leaf")));
    }
    Json children = field_or<Json>(j, "children", Json::object());
    std::vector<Branch> branches;
    for (const auto &op : field<Json>(j, "operators")) {
        Branch b;
        b.outcome = field<std::string>(op, "outcome");
        b.op = matrix_from_json(field<Json>(op, "matrix"));
        if (children.contains(b.outcome)) {
            b.child = node_from_json(children.at(b.outcome));
        }
        branches.push_back(std::move(b));
    }
    auto node = ProtocolNode::measure(field<std::string>(j, "actor"), std::move(branches));
    node->acts_on = field_or<std::vector<std::string>>(j, "acts_on", {});
    return node;
}

ProtocolTree protocol_from_json(const Json &j) {
    ProtocolTree p;
    p.name = field<std::string>(j, "name");
    p.set_ref = field_or<std::string>(j, "set_ref", "");
    p.resource_ref = field_or<std::string>(j, "resource_ref", "");
    p.root = node_from_json(field<Json>(j, "root"));
    return p;
}

Json to_json(const ValidationReport &r) {
    Json issues = Json::array();
    for (const auto &i : r.issues) {
        issues.push_back(Json{{"kind", to_string(i.kind)}, {"path", i.path}, {"message", i.message}});
    }
    return Json{{"valid", r.ok()},
                {"measurement_nodes", r.measurement_nodes},
                {"leaves", r.leaves},
                {"issues", std::move(issues)}};
}

static Json real_json(const QScalar &x) { return x.str(); }
static Json real_json(double x) { return x; }

template <class S>
Json to_json(const RunReportT<S> &r) {
    Json states = Json::array();
    for (const auto &s : r.states) {
        Json leaves = Json::array();
        for (const auto &l : s.leaves) {
            leaves.push_back(Json{{"path", l.path},
                                  {"declared", l.declared},
                                  {"probability", real_json(l.probability)},
                                  {"correct", l.correct}});
        }
        states.push_back(Json{{"label", s.label},
                              {"weight", real_json(s.weight)},
                              {"success", real_json(s.success)},
                              {"total", real_json(s.total)},
                              {"leaves", std::move(leaves)}});
    }
    Json audit = Json::array();
    for (const auto &a : r.audit_failures) {
        audit.push_back(Json{{"path", a.path}, {"first", a.first}, {"second", a.second}});
    }
    Json issues = Json::array();
    for (const auto &i : r.issues) {
        issues.push_back(Json{{"path", i.path}, {"message", i.message}});
    }
    return Json{{"protocol", r.protocol},
                {"set", r.set},
                {"resource", r.resource},
                {"exact", r.exact},
                {"success", real_json(r.success)},
                {"audit_passed", r.audit_passed()},
                {"audited_nodes", r.audited_nodes},
                {"totals_ok", r.totals_ok()},
                {"audit_failures", std::move(audit)},
                {"issues", std::move(issues)},
                {"states", std::move(states)}};
}

template <class S>
Json to_json(const SequentialReportT<S> &r) {
    Json rounds = Json::array();
    for (const auto &x : r.rounds) {
        rounds.push_back(to_json(x));
    }
    return Json{{"success", real_json(r.success)}, {"exact", is_exact_v<S>}, {"rounds", std::move(rounds)}};
}

template Json to_json(const RunReportT<CScalar> &);
template Json to_json(const RunReportT<FScalar> &);
template Json to_json(const SequentialReportT<CScalar> &);
template Json to_json(const SequentialReportT<FScalar> &);

Json to_json(const CutResult &c, bool include_basis) {
    Json out{{"group", c.cut.group},
             {"group_dim", c.group_dim},
             {"rank", c.rank},
             {"dimension", c.dimension},
             {"verdict", c.trivial ? "trivial" : "nontrivial"},
             {"identity_in_span", c.identity_in_span}};
    if (include_basis) {
        Json basis = Json::array();
        for (const auto &e : c.basis) {
            basis.push_back(to_json(e));
        }
        out["basis"] = std::move(basis);
    }
    if (c.witness) {
        out["witness"] = to_json(*c.witness);
    }
    return out;
}

Json to_json(const IrreducibilityReport &r, bool include_basis) {
    Json cuts = Json::array();
    for (const auto &c : r.cuts) {
        cuts.push_back(to_json(c, include_basis));
    }
    return Json{{"set", r.set},
                {"all_trivial", r.all_trivial()},
                {"interpretation",
                 "A trivial cut means only multiples of the identity preserve orthogonality there. This is "
                 "evidence of local irreducibility across that cut, not a proof of LOCC indistinguishability."},
                {"cuts", std::move(cuts)}};
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path.string() + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError("'" + path.string() + "': " + e.what());
    }
}

void write_json_file(const std::filesystem::path &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write '" + path.string() + "'");
    }
    out << j.dump(2) << "\n";
}

}  // namespace gnps
