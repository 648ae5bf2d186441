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


#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnps/catalog.h"
#include "gnps/io.h"
#include "gnps/oplm.h"
#include "gnps/ordering.h"
#include "gnps/protocols.h"

namespace {

using namespace gnps;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Bad input detected after argument parsing (missing file, bad JSON, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void emit(const std::string &out, const Json &j) {
    if (!out.empty()) {
        write_json_file(out, j);
    }
}

Json float_matrix_json(const Matrix<FScalar> &m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_json(const ExactMatrix &m) { return to_json(m); }
Json matrix_json(const Matrix<FScalar> &m) { return float_matrix_json(m); }

std::string resource_name(const AnyResource &r) {
    return std::visit([](const auto &x) { return x.name; }, r);
}

struct Options {
    std::string out;
    double precision = 1e-9;

    // Shared positional and reference arguments.
    std::string target;
    std::string second;
    std::string set_ref;
    std::string resource_ref;
    std::vector<std::string> protocol_refs;
    std::string parties = "A,B,C";
    std::string group;
    std::string cuts = "standard";
    size_t m = 2;
    bool no_basis = false;
    bool require_perfect = false;
};

int cmd_catalog_list(const Options &o) {
    Json j{{"sets", Json::array()}, {"resources", Json::array()}, {"protocols", Json::array()}, {"claims", Json::array()}};
    std::cout << "sets:\n";
    for (const auto &e : set_catalog()) {
        std::cout << "  " << e.name << "  " << e.description << "\n";
        j["sets"].push_back(Json{{"name", e.name}, {"description", e.description}, {"takes_m", e.takes_m}});
    }
    std::cout << "resources:\n";
    for (const auto &e : resource_catalog()) {
        std::cout << "  " << e.name << "  " << e.description << "\n";
        j["resources"].push_back(Json{{"name", e.name}, {"description", e.description}, {"exact", e.exact}});
    }
    std::cout << "protocols:\n";
    for (const auto &e : protocol_catalog()) {
        std::cout << "  " << e.name << "  " << e.description << "\n";
        j["protocols"].push_back(Json{{"name", e.name}, {"description", e.description}});
    }
    std::cout << "ordering claims:\n";
    for (const auto &e : claim_catalog()) {
        std::cout << "  " << e.id << "  " << e.summary << "\n";
        j["claims"].push_back(Json{{"id", e.id}, {"summary", e.summary}});
    }
    emit(o.out, j);
    return kOk;
}

int cmd_catalog_build(const Options &o) {
    StateSet s = build_catalog_set(o.target, o.m);
    s.verify();
    Json j = to_json(s);
    emit(o.out, j);
    std::cout << s.name << ": " << s.size() << " states over " << s.layout.total_dim() << " dimensions";
    std::cout << (o.out.empty() ? "" : ", written to " + o.out) << "\n";
    return kOk;
}

int cmd_catalog_resource(const Options &o) {
    AnyResource r = resolve_resource_ref(o.target, split_list(o.parties));
    emit(o.out, to_json(r));
    std::cout << resource_name(r) << " over " << o.parties << (o.out.empty() ? "" : ", written to " + o.out) << "\n";
    return kOk;
}

int cmd_verify_orth(const Options &o) {
    StateSet s = resolve_set_ref(o.target, false);
    size_t n = s.size();
    size_t pairs = n * (n - 1) / 2;
    auto bad = non_orthogonal_pairs(s);
    std::vector<std::string> unnormalized;
    for (const auto &m : s.members) {
        if (!m.ket.is_normalized()) {
            unnormalized.push_back(m.label);
        }
    }
    Json offending = Json::array();
    for (const auto &[a, b] : bad) {
        offending.push_back(Json::array({a, b}));
    }
    bool ok = bad.empty() && unnormalized.empty();
    emit(o.out, Json{{"set", s.name},
                     {"states", n},
                     {"pairs", pairs},
                     {"all_orthogonal", bad.empty()},
                     {"non_orthogonal_pairs", offending},
                     {"unnormalized", unnormalized}});
    if (ok) {
        std::cout << n << " states, " << pairs << " pairs, all orthogonal\n";
    } else {
        std::cout << n << " states, " << pairs << " pairs, " << bad.size() << " non-orthogonal, " << unnormalized.size()
                  << " unnormalized\n";
        for (const auto &[a, b] : bad) {
            std::cout << "  <" << a << "|" << b << "> != 0\n";
        }
    }
    return ok ? kOk : kFailed;
}

ProtocolTree load_protocol(const Options &o) { return resolve_protocol_ref(o.target, o.m); }

StateSet protocol_set(const Options &o, const ProtocolTree &p) {
    std::string ref = o.set_ref.empty() ? p.set_ref : o.set_ref;
    if (ref.empty()) {
        throw UsageError("protocol '" + p.name + "' names no set; pass --set");
    }
    return resolve_set_ref(ref);
}

AnyResource protocol_resource(const Options &o, const ProtocolTree &p, const StateSet &s) {
    std::string ref = o.resource_ref.empty() ? p.resource_ref : o.resource_ref;
    if (ref.empty()) {
        throw UsageError("protocol '" + p.name + "' names no resource; pass --resource");
    }
    return resolve_resource_ref(ref, party_names(s.layout));
}

int cmd_protocol_build(const Options &o) {
    ProtocolTree p = load_protocol(o);
    emit(o.out, to_json(p));
    std::cout << p.name << " (set " << p.set_ref << ", resource " << p.resource_ref << ")"
              << (o.out.empty() ? "" : ", written to " + o.out) << "\n";
    return kOk;
}

int cmd_protocol_validate(const Options &o) {
    ProtocolTree p = load_protocol(o);
    StateSet s = protocol_set(o, p);
    AnyResource r = protocol_resource(o, p, s);
    // Validation needs only the layout, so float resources use a product stand-in.
    Resource shape = std::visit(
        [&](const auto &x) {
            std::vector<std::vector<size_t>> shapes;
            for (const auto &party : x.layout.parties()) {
                shapes.push_back(party.ancilla);
            }
            return product_resource(party_names(x.layout), shapes);
        },
        r);
    ValidationReport v = validate(p, s, shape);
    emit(o.out, to_json(v));
    if (v.ok()) {
        std::cout << p.name << ": valid (" << v.measurement_nodes << " measurement nodes, " << v.leaves << " leaves)\n";
        return kOk;
    }
    std::cout << p.name << ": " << v.issues.size() << " issue(s)\n";
    for (const auto &i : v.issues) {
        std::cout << "  " << to_string(i.kind) << " at " << i.path << ": " << i.message << "\n";
    }
    return kFailed;
}

template <class S>
int report_run(const Options &o, const RunReportT<S> &rep, const Payoff &pay) {
    emit(o.out, to_json(rep));
    std::cout << "success probability = " << pay.str() << (pay.exact ? " (exact)" : " (floating point)") << "\n";
    std::cout << "audit " << (rep.audit_passed() ? "passed" : "FAILED") << " at " << rep.audited_nodes << " nodes";
    if (!rep.audit_failures.empty()) {
        std::cout << ", " << rep.audit_failures.size() << " non-orthogonal residual pair(s)";
    }
    std::cout << "\n";
    for (const auto &i : rep.issues) {
        std::cout << "  issue at " << i.path << ": " << i.message << "\n";
    }
    bool ok = rep.audit_passed() && rep.totals_ok();
    if (!rep.totals_ok()) {
        std::cout << "branch probabilities do not sum to 1 for some state\n";
    }
    if (o.require_perfect && !pay.is_one()) {
        ok = false;
    }
    return ok ? kOk : kFailed;
}

int cmd_protocol_run(const Options &o) {
    ProtocolTree p = load_protocol(o);
    StateSet s = protocol_set(o, p);
    AnyResource r = protocol_resource(o, p, s);
    std::cout << p.name << " on " << s.name << " (" << s.size() << " states) with " << resource_name(r) << "\n";
    if (const auto *exact = std::get_if<Resource>(&r)) {
        auto rep = run_exhaustive(p, s, *exact);
        return report_run(o, rep, Payoff{true, rep.success, rep.success.to_double()});
    }
    auto rep = run_exhaustive(p, to_float(s), std::get<FloatResource>(r));
    return report_run(o, rep, Payoff{false, QScalar(), rep.success});
}

template <class S>
bool report_sequential(const Options &o, const SequentialReportT<S> &rep) {
    emit(o.out, to_json(rep));
    bool ok = true;
    for (size_t k = 0; k < rep.rounds.size(); k++) {
        const auto &round = rep.rounds[k];
        std::cout << "round " << k + 1 << ": success " << round.success << " with " << round.resource << "\n";
        ok = ok && round.audit_passed() && round.totals_ok();
    }
    std::cout << "success probability = " << rep.success << (is_exact_v<S> ? " (exact)" : " (floating point)") << "\n";
    return ok;
}

int cmd_task_sequential(const Options &o) {
    Task t = task_from_json(read_json_file(o.target));
    if (t.kind != Task::Kind::sequential) {
        throw UsageError("task '" + t.name + "' is not sequential");
    }
    StateSet s = resolve_set_ref(t.set_ref);
    std::vector<ProtocolTree> protocols;
    for (const auto &ref : o.protocol_refs.empty() ? std::vector<std::string>{"theorem1"} : o.protocol_refs) {
        protocols.push_back(resolve_protocol_ref(ref, o.m));
    }
    AnyResource r = resolve_resource_ref(o.resource_ref.empty() ? "psi3" : o.resource_ref, party_names(s.layout));
    bool ok = false;
    if (const auto *exact = std::get_if<Resource>(&r)) {
        ok = report_sequential(o, run_sequential(t.sequential(), s, *exact, protocols));
    } else {
        ok = report_sequential(o, run_sequential(t.sequential(), to_float(s), std::get<FloatResource>(r), protocols));
    }
    return ok ? kOk : kFailed;
}

int cmd_irreducible(const Options &o) {
    StateSet s = resolve_set_ref(o.target);
    CutMode mode;
    try {
        mode = parse_cut_mode(o.cuts);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    auto rep = gnps_evidence(s, mode);
    emit(o.out, to_json(rep, !o.no_basis));
    std::cout << s.name << ": " << rep.cuts.size() << " cut(s)\n";
    for (const auto &c : rep.cuts) {
        std::cout << "  {" << c.cut.str() << "} (D = " << c.group_dim << "): d = " << c.dimension << ", "
                  << (c.trivial ? "trivial" : "nontrivial") << "\n";
    }
    std::cout << (rep.all_trivial() ? "all verdicts trivial" : "some verdicts nontrivial")
              << " (evidence of local irreducibility, not a proof of LOCC indistinguishability)\n";
    return kOk;
}

int cmd_ordering(const Options &o) {
    ClaimOptions c;
    c.m = o.m;
    if (!o.protocol_refs.empty()) {
        c.protocol = resolve_protocol_ref(o.protocol_refs.front(), o.m);
    }
    if (!o.set_ref.empty()) {
        c.set_ref = o.set_ref;
    }
    if (!o.resource_ref.empty()) {
        c.resource_ref = o.resource_ref;
    }
    OrderingClaim claim;
    try {
        claim = ordering_report(o.target, c);
    } catch (const ClaimRefused &e) {
        std::cout << "claim refused: " << e.what() << "\n";
        return kFailed;
    }
    Json j = to_json(claim);
    emit(o.out, j);
    std::cout << j["statement"].get<std::string>() << "\n";
    for (const auto *side : {"left_provenance", "right_provenance"}) {
        for (const auto &p : j[side]) {
            std::cout << "  " << (side[0] == 'l' ? "left " : "right") << "  " << p["kind"].get<std::string>();
            if (p.contains("probability")) {
                std::cout << " p = " << p["probability"].get<std::string>();
            }
            std::cout << "  [" << p["status"].get<std::string>() << "]\n";
        }
    }
    if (!claim.note.empty()) {
        std::cout << "  note: " << claim.note << "\n";
    }
    return kOk;
}

template <class S>
Json marginal_report(const ResourceT<S> &r, const std::vector<std::string> &only, bool &all_psd) {
    Json out = Json::object();
    auto k = r.as_ket();
    for (const auto &p : r.layout.parties()) {
        if (!only.empty() && std::find(only.begin(), only.end(), p.name) == only.end()) {
            continue;
        }
        auto rho = single_party_marginal(k, p.name);
        size_t d = rho.rows();
        S trace{};
        for (size_t i = 0; i < d; i++) {
            trace += rho(i, i);
        }
        bool psd = is_positive_semidefinite(rho);
        all_psd = all_psd && psd;
        bool maximally_mixed = true;
        for (size_t a = 0; a < d; a++) {
            for (size_t b = 0; b < d; b++) {
                S expect = a == b ? S(1) / S(static_cast<long>(d)) : S{};
                if (!is_zero(rho(a, b) - expect)) {
                    maximally_mixed = false;
                }
            }
        }
        std::cout << "  " << p.name << " (dim " << d << "): trace " << (is_zero(trace - S(1)) ? "1" : "!= 1") << ", "
                  << (psd ? "positive semidefinite" : "NOT positive semidefinite")
                  << (maximally_mixed ? ", equals I/" + std::to_string(d) : "") << "\n";
        out[p.name] = Json{{"matrix", matrix_json(rho)}, {"positive_semidefinite", psd}, {"maximally_mixed", maximally_mixed}};
    }
    return out;
}

int cmd_marginals(const Options &o) {
    AnyResource r = resolve_resource_ref(o.target, split_list(o.parties));
    bool psd = true;
    std::cout << resource_name(r) << " single-party marginals:\n";
    Json j = std::visit([&](const auto &x) { return marginal_report(x, split_list(o.group), psd); }, r);
    emit(o.out, Json{{"resource", resource_name(r)}, {"marginals", j}});
    return psd ? kOk : kFailed;
}

int cmd_schmidt(const Options &o) {
    AnyResource r = resolve_resource_ref(o.target, split_list(o.parties));
    auto group = split_list(o.group);
    if (group.empty()) {
        throw UsageError("--group must name at least one party");
    }
    size_t rank = std::visit([&](const auto &x) { return schmidt_rank(x.as_ket(), group); }, r);
    emit(o.out, Json{{"resource", resource_name(r)}, {"group", group}, {"schmidt_rank", rank}});
    std::cout << "schmidt rank of " << resource_name(r) << " across " << o.group << " | rest = " << rank << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gnps: exact verification of entanglement-assisted local discrimination protocols"};
    app.require_subcommand(1);
    Options o;
    int status = kOk;
    std::function<int(const Options &)> action;

    app.add_option("--precision", o.precision, "Tolerance for the floating-point fallback")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto with_out = [&](CLI::App *sub) { sub->add_option("--out", o.out, "Write the JSON report to this file"); };
    auto bind = [&](CLI::App *sub, int (*f)(const Options &)) { sub->callback([&action, f] { action = f; }); };

    auto *catalog = app.add_subcommand("catalog", "List or build catalog sets and resources");
    catalog->require_subcommand(1);
    auto *cat_list = catalog->add_subcommand("list", "List sets, resources, protocols and ordering claims");
    with_out(cat_list);
    bind(cat_list, cmd_catalog_list);
    auto *cat_build = catalog->add_subcommand("build", "Write a catalog state set as JSON");
    cat_build->add_option("name", o.target, "Catalog set name")->required();
    cat_build->add_option("--m", o.m, "Family size for the G_{m+1} set")->capture_default_str();
    with_out(cat_build);
    bind(cat_build, cmd_catalog_build);
    auto *cat_res = catalog->add_subcommand("resource", "Write a catalog resource as JSON");
    cat_res->add_option("name", o.target, "Resource name or reference")->required();
    cat_res->add_option("--parties", o.parties, "Comma-separated party names")->capture_default_str();
    with_out(cat_res);
    bind(cat_res, cmd_catalog_resource);

    auto *verify = app.add_subcommand("verify-orth", "Check exact pairwise orthogonality of a state set");
    verify->add_option("set", o.target, "Set JSON file or catalog reference")->required();
    with_out(verify);
    bind(verify, cmd_verify_orth);

    auto *protocol = app.add_subcommand("protocol", "Validate, run or build protocol trees");
    protocol->require_subcommand(1);
    auto protocol_common = [&](CLI::App *sub) {
        sub->add_option("protocol", o.target, "Protocol JSON file or catalog name")->required();
        sub->add_option("--m", o.m, "Family size for prop3")->capture_default_str();
        with_out(sub);
    };
    auto *p_validate = protocol->add_subcommand("validate", "Check completeness, locality and labels");
    protocol_common(p_validate);
    p_validate->add_option("--set", o.set_ref, "Override the protocol's set reference");
    p_validate->add_option("--resource", o.resource_ref, "Override the protocol's resource reference");
    bind(p_validate, cmd_protocol_validate);
    auto *p_run = protocol->add_subcommand("run", "Run every member through every branch");
    protocol_common(p_run);
    p_run->add_option("--set", o.set_ref, "Override the protocol's set reference");
    p_run->add_option("--resource", o.resource_ref, "Resource name or JSON file");
    p_run->add_option("--report", o.out, "Alias of --out");
    p_run->add_flag("--require-perfect", o.require_perfect, "Exit 1 unless the success probability is exactly 1");
    bind(p_run, cmd_protocol_run);
    auto *p_build = protocol->add_subcommand("build", "Write a catalog protocol as JSON");
    protocol_common(p_build);
    bind(p_build, cmd_protocol_build);

    auto *task = app.add_subcommand("task", "Run multi-round tasks");
    task->require_subcommand(1);
    auto *seq = task->add_subcommand("run-sequential", "Run a sequential task, one resource share per round");
    seq->add_option("task", o.target, "Task JSON file")->required();
    seq->add_option("--resource", o.resource_ref, "Resource name or JSON file (default psi3)");
    seq->add_option("--protocol", o.protocol_refs, "Protocol per round, or one for every round (default theorem1)");
    seq->add_option("--m", o.m, "Family size for prop3")->capture_default_str();
    with_out(seq);
    bind(seq, cmd_task_sequential);

    auto *irr = app.add_subcommand("irreducible", "Orthogonality-preserving local measurement analysis");
    irr->require_subcommand(1);
    auto *check = irr->add_subcommand("check", "Solve for orthogonality-preserving operators on each cut");
    check->add_option("set", o.target, "Set JSON file or catalog reference")->required();
    check->add_option("--cuts", o.cuts, "singles, leave-one-out, standard or all")->capture_default_str();
    check->add_flag("--no-basis", o.no_basis, "Omit solution bases from the JSON report");
    with_out(check);
    bind(check, cmd_irreducible);

    auto *ordering = app.add_subcommand("ordering", "Resource ordering claims with typed provenance");
    ordering->require_subcommand(1);
    auto *report = ordering->add_subcommand("report", "Assemble and check an ordering claim");
    report->add_option("claim", o.target, "Claim id (see catalog list)")->required();
    report->add_option("--m", o.m, "Family size for ghzn-beats-partial")->capture_default_str();
    report->add_option("--protocol", o.protocol_refs, "User protocol (file or catalog name)");
    report->add_option("--set", o.set_ref, "Set for the reflexive claim");
    report->add_option("--resource", o.resource_ref, "Resource for the reflexive claim");
    with_out(report);
    bind(report, cmd_ordering);

    auto *marg = app.add_subcommand("marginals", "Single-party reduced states of a resource");
    marg->add_option("resource", o.target, "Resource name or JSON file")->required();
    marg->add_option("--parties", o.parties, "Comma-separated party names")->capture_default_str();
    marg->add_option("--party", o.group, "Restrict to these parties (comma-separated)");
    with_out(marg);
    bind(marg, cmd_marginals);

    auto *schmidt = app.add_subcommand("schmidt-rank", "Schmidt rank of a resource across group | rest");
    schmidt->add_option("resource", o.target, "Resource name or JSON file")->required();
    schmidt->add_option("--parties", o.parties, "Comma-separated party names")->capture_default_str();
    schmidt->add_option("--group", o.group, "Comma-separated parties on one side of the cut")->required();
    with_out(schmidt);
    bind(schmidt, cmd_schmidt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }

    set_float_tolerance(o.precision);
    try {
        status = action(o);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kFailed;
    }
    return status;
}
