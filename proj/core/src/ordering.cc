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


#include "gnps/ordering.h"

#include <cctype>
#include <cstdio>
#include <filesystem>

#include "gnps/catalog.h"
#include "gnps/protocols.h"

namespace gnps {

SequentialTask Task::sequential() const {
    return SequentialTask{name, set_ref, rounds, partition};
}

Json to_json(const Task &t) {
    Json out{{"name", t.name},
             {"set_ref", t.set_ref},
             {"kind", t.kind == Task::Kind::single ? "single" : "sequential"},
             {"rounds", t.rounds}};
    if (t.prior) {
        Json p = Json::array();
        for (const auto &x : *t.prior) {
            p.push_back(x.str());
        }
        out["prior"] = std::move(p);
    }
    if (!t.partition.empty()) {
        out["partition"] = t.partition;
    }
    return out;
}

Task task_from_json(const Json &j) {
    Task t;
    try {
        t.name = j.at("name").get<std::string>();
        t.set_ref = j.at("set_ref").get<std::string>();
        std::string kind = j.value("kind", "single");
        if (kind == "single") {
            t.kind = Task::Kind::single;
        } else if (kind == "sequential") {
            t.kind = Task::Kind::sequential;
        } else {
            throw FormatError("task kind must be 'single' or 'sequential'");
        }
        t.rounds = j.value("rounds", size_t{1});
        if (j.contains("partition")) {
            t.partition = j.at("partition").get<std::vector<std::vector<size_t>>>();
        }
        if (j.contains("prior")) {
            std::vector<QScalar> prior;
            for (const auto &x : j.at("prior")) {
                prior.push_back(exact_scalar_from_json(x).re());
            }
            t.prior = std::move(prior);
        }
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("task: ") + e.what());
    }
    if (t.rounds == 0) {
        throw FormatError("task needs at least one round");
    }
    if (t.kind == Task::Kind::single && t.rounds != 1) {
        throw FormatError("a single task has exactly one round");
    }
    if (t.prior) {
        QScalar sum;
        for (const auto &x : *t.prior) {
            if (x.sign() < 0) {
                throw FormatError("prior entries must be nonnegative");
            }
            sum += x;
        }
        if (sum != QScalar(1)) {
            throw FormatError("prior sums to " + sum.str() + ", not 1");
        }
    }
    return t;
}

namespace {

std::string lower(std::string s) {
    for (auto &c : s) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

bool looks_like_file(const std::string &ref) {
    return ref.size() > 5 && ref.ends_with(".json");
}

std::optional<size_t> family_size(const std::string &ref) {
    // "g<n>" with n >= 2.
    if (ref.size() < 2 || ref[0] != 'g') {
        return std::nullopt;
    }
    size_t n = 0;
    for (size_t k = 1; k < ref.size(); k++) {
        if (!std::isdigit(static_cast<unsigned char>(ref[k]))) {
            return std::nullopt;
        }
        n = n * 10 + static_cast<size_t>(ref[k] - '0');
    }
    if (n < 2) {
        return std::nullopt;
    }
    return n;
}

}  // namespace

StateSet resolve_set_ref(const std::string &ref, bool verify) {
    if (looks_like_file(ref)) {
        StateSet s = state_set_from_json(read_json_file(ref));
        if (verify) {
            s.verify();
        }
        return s;
    }
    std::string key = lower(ref);
    if (key == "h'" || key == "h_prime") {
        return build_h_prime();
    }
    if (key == "g3") {
        return build_g3();
    }
    if (auto n = family_size(key)) {
        return build_g_general(*n - 1);
    }
    for (const auto &e : set_catalog()) {
        if (!e.takes_m && key == e.name) {
            return build_catalog_set(key);
        }
    }
    if (key == "s_g5") {
        return build_sg5();
    }
    throw std::invalid_argument("unknown set reference '" + ref + "'");
}

AnyResource resolve_resource_ref(const std::string &ref, const std::vector<std::string> &parties) {
    if (looks_like_file(ref)) {
        return resource_from_json(read_json_file(ref));
    }
    std::string key = lower(ref);
    if (key == "phi+") {
        return build_resource("phi_plus", parties);
    }
    if (key == "g(4)") {
        return build_resource("ghz4", parties);
    }
    if (auto n = family_size(key)) {
        if (*n != parties.size()) {
            throw LayoutError("resource '" + ref + "' is for " + std::to_string(*n) + " parties, the set has " +
                              std::to_string(parties.size()));
        }
        return build_resource("ghz", parties);
    }
    return build_resource(key, parties);
}

ProtocolTree resolve_protocol_ref(const std::string &ref, size_t m) {
    if (looks_like_file(ref)) {
        return protocol_from_json(read_json_file(ref));
    }
    return build_catalog_protocol(ref, m);
}

std::string Payoff::str() const {
    if (exact) {
        return value.str();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", approx);
    return buf;
}

bool Payoff::is_one() const { return exact && value == QScalar(1); }

namespace {

Payoff from_real(const QScalar &x) { return Payoff{true, x, x.to_double()}; }
Payoff from_real(double x) { return Payoff{false, QScalar(), x}; }

template <class S>
Payoff run_payoff(const Task &task, const StateSetT<S> &set, const ResourceT<S> &resource,
                  const std::vector<ProtocolTree> &protocols) {
    if (protocols.empty()) {
        throw std::invalid_argument("payoff needs a protocol");
    }
    if (task.kind == Task::Kind::sequential) {
        if (task.prior) {
            throw std::invalid_argument("sequential tasks draw uniformly in every round");
        }
        return from_real(run_sequential(task.sequential(), set, resource, protocols).success);
    }
    std::optional<std::vector<real_of_t<S>>> prior;
    if (task.prior) {
        if (task.prior->size() != set.size()) {
            throw std::invalid_argument("prior has " + std::to_string(task.prior->size()) + " entries for " +
                                        std::to_string(set.size()) + " states");
        }
        prior.emplace();
        for (const auto &x : *task.prior) {
            if constexpr (is_exact_v<S>) {
                prior->push_back(x);
            } else {
                prior->push_back(x.to_double());
            }
        }
    }
    return from_real(run_exhaustive(protocols.front(), set, resource, prior).success);
}

}  // namespace

Payoff payoff(const Task &task, const StateSet &set, const AnyResource &resource,
              const std::vector<ProtocolTree> &protocols) {
    if (const auto *exact = std::get_if<Resource>(&resource)) {
        return run_payoff(task, set, *exact, protocols);
    }
    return run_payoff(task, to_float(set), std::get<FloatResource>(resource), protocols);
}

std::string to_string(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::achieved_by_protocol:
            return "achieved-by-protocol";
        case Provenance::Kind::protocol_relative_failure:
            return "protocol-relative-failure";
        case Provenance::Kind::cited_impossibility:
            return "paper-cited-impossibility";
        case Provenance::Kind::checker_evidence:
            return "checker-evidence";
    }
    return "?";
}

std::string to_string(OrderingClaim::Relation r) {
    switch (r) {
        case OrderingClaim::Relation::strict:
            return "succ";
        case OrderingClaim::Relation::weak:
            return "succeq";
        case OrderingClaim::Relation::incomparable_evidence:
            return "incomparable-evidence";
    }
    return "?";
}

Json to_json(const Provenance &p) {
    Json out{{"kind", to_string(p.kind)}, {"resource", p.resource}, {"reference", p.reference}, {"status", p.status}};
    if (!p.protocol.empty()) {
        out["protocol"] = p.protocol;
    }
    if (p.probability) {
        out["probability"] = p.probability->str();
        out["exact"] = p.probability->exact;
    }
    if (!p.evidence.is_null()) {
        out["evidence"] = p.evidence;
    }
    return out;
}

Json to_json(const OrderingClaim &c) {
    static const char *symbols[] = {"≻", "≽", "incomparable-evidence"};
    Json left = Json::array();
    for (const auto &p : c.left_records) {
        left.push_back(to_json(p));
    }
    Json right = Json::array();
    for (const auto &p : c.right_records) {
        right.push_back(to_json(p));
    }
    return Json{{"id", c.id},
                {"task", c.task},
                {"left", c.left},
                {"right", c.right},
                {"relation", to_string(c.relation)},
                {"symbol", symbols[static_cast<int>(c.relation)]},
                {"statement", c.left + " " + symbols[static_cast<int>(c.relation)] + "_" + c.task + " " + c.right},
                {"left_provenance", std::move(left)},
                {"right_provenance", std::move(right)},
                {"facts", c.facts},
                {"note", c.note}};
}

void check_claim(const OrderingClaim &c) {
    for (const auto *records : {&c.left_records, &c.right_records}) {
        for (const auto &p : *records) {
            if (p.status.empty()) {
                throw ClaimRefused(c.id + ": a provenance record has no epistemic status");
            }
        }
    }
    bool left_achieved = std::any_of(c.left_records.begin(), c.left_records.end(), [](const Provenance &p) {
        return p.kind == Provenance::Kind::achieved_by_protocol && p.probability && p.probability->is_one();
    });
    bool right_failure = std::any_of(c.right_records.begin(), c.right_records.end(), [](const Provenance &p) {
        return p.kind == Provenance::Kind::protocol_relative_failure ||
               p.kind == Provenance::Kind::cited_impossibility;
    });
    switch (c.relation) {
        case OrderingClaim::Relation::strict:
            if (!left_achieved) {
                throw ClaimRefused(c.id + ": strict relation without an exact success-1 record on the left");
            }
            if (!right_failure) {
                throw ClaimRefused(c.id + ": strict relation without a failure or impossibility record on the right");
            }
            break;
        case OrderingClaim::Relation::weak:
            if (!left_achieved && c.left != c.right) {
                throw ClaimRefused(c.id + ": weak relation without an exact success-1 record on the left");
            }
            break;
        case OrderingClaim::Relation::incomparable_evidence:
            if (c.left_records.empty() || c.right_records.empty()) {
                throw ClaimRefused(c.id + ": evidence claim with an empty side");
            }
            break;
    }
}

const std::vector<ClaimInfo> &claim_catalog() {
    static const std::vector<ClaimInfo> claims = {
        {"ghz3-beats-bipartite", "|g3> strictly better than any two-party resource for discriminating G3"},
        {"ghzn-beats-partial", "|g_{m+1}> strictly better than any m-party resource for G_{m+1} (--m 1..4)"},
        {"two-ghz-vs-three-epr-sigma", "|psi3> at least as good as |phi3> for discriminating Sigma"},
        {"two-ghz-vs-three-epr-sequential", "|psi3> strictly better than |phi3> for two sequential draws from G3"},
        {"three-epr-vs-two-ghz-h", "|phi3> at least as good as |psi3> for H (needs a user protocol)"},
        {"epr-vs-weighted-epr", "|phi+> at least as good as a nonmaximal two-qubit state for G2"},
        {"reflexive", "any resource is at least as good as itself (--set, --resource, --protocol)"},
    };
    return claims;
}

namespace {

const char *kComputed = "computed exactly by the protocol engine";
const char *kComputedFloat = "computed by the protocol engine on the floating path";

Task single_task(const std::string &name, const StateSet &set) { return Task{name, set.name, Task::Kind::single, 1, {}, {}}; }

Provenance protocol_record(const std::string &resource_name, const ProtocolTree &p, const Payoff &pay,
                           const std::string &reference) {
    Provenance r;
    r.kind = pay.is_one() ? Provenance::Kind::achieved_by_protocol : Provenance::Kind::protocol_relative_failure;
    r.resource = resource_name;
    r.protocol = p.name;
    r.probability = pay;
    r.reference = reference;
    r.status = pay.exact ? kComputed : kComputedFloat;
    if (!pay.is_one()) {
        r.status += "; failure is relative to this protocol, not an LOCC bound";
    }
    return r;
}

Provenance cited(const std::string &resource_name, const std::string &reference, const std::string &status) {
    Provenance r;
    r.kind = Provenance::Kind::cited_impossibility;
    r.resource = resource_name;
    r.reference = reference;
    r.status = status;
    return r;
}

Provenance oplm_record(const std::string &resource_name, const StateSet &set, CutMode mode) {
    auto report = gnps_evidence(set, mode);
    Provenance r;
    r.kind = Provenance::Kind::checker_evidence;
    r.resource = resource_name;
    r.reference = "orthogonality-preserving local measurement analysis of " + set.name;
    r.status = report.all_trivial() ? "evidence only: every examined cut is locally irreducible"
                                    : "evidence only: some cuts admit nontrivial orthogonality-preserving operators, "
                                      "so the check is inconclusive there";
    r.evidence = to_json(report, false);
    return r;
}

/// Schmidt rank of `r` across each single-party cut.
Json single_cut_ranks(const Resource &r) {
    Json out = Json::object();
    auto k = r.as_ket();
    for (const auto &p : r.layout.parties()) {
        out[p.name] = schmidt_rank(k, {p.name});
    }
    return out;
}

/// Entangled pair between the first two parties, the rest unentangled.
Resource pair_plus_product(const std::vector<std::string> &parties) {
    Resource pair = ghz_resource({parties[0], parties[1]}, 2);
    std::vector<Ket<CScalar>> kets{pair.as_ket()};
    for (size_t k = 2; k < parties.size(); k++) {
        kets.push_back(ExactKet::basis(PartyLayout::systems({{parties[k], 2}}), {0}));
    }
    auto joint = tensor(kets);
    std::vector<std::pair<std::string, std::vector<std::string>>> shares;
    for (const auto &p : parties) {
        shares.push_back({p, {p}});
    }
    return make_resource("epr(" + parties[0] + parties[1] + ") (x) |0>", joint, shares, "two-party entanglement only");
}

Json schmidt_facts(const Resource &genuine, const std::vector<std::string> &parties) {
    Resource partial = pair_plus_product(parties);
    return Json{{"statement",
                 "Schmidt rank cannot increase under LOCC, so a resource confined to fewer parties cannot supply the "
                 "rank-2 correlation across every single-party cut"},
                {genuine.name + " single-party cut ranks", single_cut_ranks(genuine)},
                {partial.name + " single-party cut ranks", single_cut_ranks(partial)}};
}

OrderingClaim ghz_family_claim(size_t m) {
    bool three = m == 2;
    StateSet set = three ? build_g3() : build_g_general(m);
    ProtocolTree p = three ? build_theorem1_protocol() : build_prop3_protocol(m);
    auto parties = party_names(set.layout);
    Resource g = ghz_resource(parties, 2);
    Task t = single_task("tau" + std::to_string(m + 1), set);
    Payoff pay = payoff(t, set, g, {p});

    OrderingClaim c;
    c.id = three ? "ghz3-beats-bipartite" : "ghzn-beats-partial";
    c.task = t.name;
    c.left = g.name;
    c.right = three ? "any rho on two parties" : "any rho on " + std::to_string(m) + " parties";
    c.relation = OrderingClaim::Relation::strict;
    c.left_records.push_back(protocol_record(g.name, p, pay, "GHZ-assisted discrimination tree for " + set.name));
    c.right_records.push_back(oplm_record(c.right, set, three ? CutMode::leave_one_out : CutMode::singles));
    c.right_records.push_back(cited(
        c.right,
        three ? "G3 cannot be locally discriminated even when Charlie groups with either Alice or Bob"
              : set.name + " cannot be locally discriminated even when any " + std::to_string(m) +
                    " parties come together",
        "published proof (reduction argument); not machine-checked"));
    c.facts = schmidt_facts(g, parties);
    c.note = "The strict side rests on the cited impossibility; the engine certifies only the left achievability.";
    return c;
}

OrderingClaim sigma_claim() {
    StateSet set = build_sigma();
    auto parties = party_names(set.layout);
    ProtocolTree p = build_prop5_protocol();
    Task t = single_task("tau3'", set);
    Resource psi = psi3_resource(parties);
    Resource phi = phi3_resource(parties);

    OrderingClaim c;
    c.id = "two-ghz-vs-three-epr-sigma";
    c.task = t.name;
    c.left = psi.name;
    c.right = phi.name;
    c.relation = OrderingClaim::Relation::weak;
    c.left_records.push_back(protocol_record(psi.name, p, payoff(t, set, psi, {p}), "ququad-GHZ discrimination tree for Sigma"));
    c.right_records.push_back(protocol_record(phi.name, p, payoff(t, set, phi, {p}), "same tree with three EPR pairs"));

    auto tb = analyze_twistbreak(set, phi, sigma_inner_layer_labels());
    Provenance ev;
    ev.kind = Provenance::Kind::checker_evidence;
    ev.resource = phi.name;
    ev.reference = "twist-breaking step on the A-B1 slice of Sigma with three EPR pairs";
    ev.status = tb.constant_tag ? "evidence only: inner-layer residuals keep a constant ancilla tag (the protocol stalls)"
                                : "evidence only: inner-layer residuals do not keep a constant tag";
    ev.evidence = Json{{"constant_tag", tb.constant_tag}, {"members", sigma_inner_layer_labels()}};
    c.right_records.push_back(std::move(ev));
    c.note = "Strictness needs a protocol-independent argument and is left open, so only the weak relation is emitted.";
    return c;
}

OrderingClaim sequential_claim() {
    StateSet set = build_g3();
    auto parties = party_names(set.layout);
    ProtocolTree p = build_theorem1_protocol();
    Task t{"tau3''", set.name, Task::Kind::sequential, 2, {}, {{0}, {1}}};
    Resource psi = psi3_resource(parties);
    Resource phi = phi3_resource(parties);
    Resource one_left =
        tensor_resources(ghz_resource(parties, 2), product_resource(parties, std::vector<std::vector<size_t>>(3, {2})),
                         "g3 (x) |000>");

    OrderingClaim c;
    c.id = "two-ghz-vs-three-epr-sequential";
    c.task = t.name;
    c.left = psi.name;
    c.right = phi.name;
    c.relation = OrderingClaim::Relation::strict;
    Provenance left = protocol_record(psi.name, p, payoff(t, set, psi, {p}), "one GHZ copy per round, GHZ tree each round");
    left.protocol = p.name + " x2";
    c.left_records.push_back(std::move(left));

    Provenance fail = protocol_record(one_left.name, p, payoff(t, set, one_left, {p}),
                                      "only the first round keeps a GHZ-shaped share after the first discrimination");
    fail.protocol = p.name + " x2";
    fail.resource = phi.name + " (modelled as " + one_left.name + ")";
    c.right_records.push_back(std::move(fail));

    Provenance split;
    split.kind = Provenance::Kind::checker_evidence;
    split.resource = phi.name;
    split.reference = "per-round factorization of " + phi.name;
    try {
        split_resource(phi, t.sequential());
        split.status = "evidence only: the resource splits into per-round shares";
    } catch (const ProtocolError &e) {
        split.status = "evidence only: the resource does not split into independent per-round shares";
        split.evidence = Json{{"error", e.what()}};
    }
    c.right_records.push_back(std::move(split));
    c.right_records.push_back(cited(phi.name,
                                    "G3 being a GNPS necessitates consumption of at least two of the three "
                                    "symmetrically distributed EPR states for the first draw",
                                    "published resource-counting argument; not machine-checked"));
    return c;
}

OrderingClaim h_claim(const ClaimOptions &o) {
    if (!o.protocol) {
        throw ClaimRefused(
            "three-epr-vs-two-ghz-h: no protocol for H with three EPR pairs is shipped; supply one with --protocol");
    }
    StateSet set = build_h();
    auto parties = party_names(set.layout);
    Task t = single_task("tau3'''", set);
    Resource phi = phi3_resource(parties);
    Resource psi = psi3_resource(parties);

    OrderingClaim c;
    c.id = "three-epr-vs-two-ghz-h";
    c.task = t.name;
    c.left = phi.name;
    c.right = psi.name;
    c.relation = OrderingClaim::Relation::weak;
    c.left_records.push_back(protocol_record(phi.name, *o.protocol, payoff(t, set, phi, {*o.protocol}),
                                             "user-supplied protocol"));
    c.right_records.push_back(protocol_record(psi.name, *o.protocol, payoff(t, set, psi, {*o.protocol}),
                                              "same user-supplied protocol"));
    c.right_records.push_back(cited(psi.name, "two copies of three-qubit GHZ fail to perfectly discriminate H",
                                    "published observation, argued informally"));
    c.right_records.push_back(oplm_record(psi.name, set, CutMode::standard));
    return c;
}

OrderingClaim epr_claim() {
    StateSet set = build_g_general(1);
    auto parties = party_names(set.layout);
    ProtocolTree p = build_prop3_protocol(1);
    Task t = single_task("tau2", set);
    AnyResource epr = build_resource("phi_plus", parties);
    AnyResource chi = build_resource("chi", parties);

    OrderingClaim c;
    c.id = "epr-vs-weighted-epr";
    c.task = t.name;
    c.left = "phi+";
    c.right = "chi(sqrt(2/3), sqrt(1/3))";
    c.relation = OrderingClaim::Relation::weak;
    c.left_records.push_back(protocol_record(c.left, p, payoff(t, set, epr, {p}), "EPR-assisted tree for G2"));
    c.right_records.push_back(protocol_record(c.right, p, payoff(t, set, chi, {p}), "same tree, nonmaximal pair"));
    c.right_records.push_back(cited(c.right,
                                    "a nonmaximally entangled two-qubit state cannot complete the two-party task "
                                    "under any local protocol",
                                    "conjectured (Cohen); only the protocol-relative failure is established"));
    c.note = "G2 stands in for the two-party task; Cohen's own protocol for S_Ben is not shipped.";
    return c;
}

OrderingClaim reflexive_claim(const ClaimOptions &o) {
    StateSet set = resolve_set_ref(o.set_ref);
    ProtocolTree p = o.protocol ? *o.protocol : resolve_protocol_ref(o.protocol_ref, o.m);
    AnyResource r = resolve_resource_ref(o.resource_ref, party_names(set.layout));
    Task t = single_task("tau(" + set.name + ")", set);
    Payoff pay = payoff(t, set, r, {p});
    auto rec = protocol_record(o.resource_ref, p, pay, "same protocol on both sides");

    OrderingClaim c;
    c.id = "reflexive";
    c.task = t.name;
    c.left = o.resource_ref;
    c.right = o.resource_ref;
    c.relation = OrderingClaim::Relation::weak;
    c.left_records.push_back(rec);
    c.right_records.push_back(rec);
    return c;
}

}  // namespace

OrderingClaim ordering_report(const std::string &id, const ClaimOptions &options) {
    OrderingClaim c;
    if (id == "ghz3-beats-bipartite") {
        c = ghz_family_claim(2);
    } else if (id == "ghzn-beats-partial") {
        if (options.m < 1 || options.m > 4) {
            throw std::invalid_argument("ghzn-beats-partial supports m in 1..4");
        }
        c = ghz_family_claim(options.m);
        c.id = id;
    } else if (id == "two-ghz-vs-three-epr-sigma") {
        c = sigma_claim();
    } else if (id == "two-ghz-vs-three-epr-sequential") {
        c = sequential_claim();
    } else if (id == "three-epr-vs-two-ghz-h") {
        c = h_claim(options);
    } else if (id == "epr-vs-weighted-epr") {
        c = epr_claim();
    } else if (id == "reflexive") {
        c = reflexive_claim(options);
    } else {
        throw std::invalid_argument("unknown claim '" + id + "'");
    }
    check_claim(c);
    return c;
}

}  // namespace gnps
