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


#include "gnps/engine.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace gnps {

namespace {

template <class S>
Matrix<S> op_as(const ExactMatrix &m) {
    if constexpr (is_exact_v<S>) {
        return m;
    } else {
        return to_float(m);
    }
}

template <class S>
real_of_t<S> real_sqrt(const real_of_t<S> &x, const char *what) {
    if constexpr (is_exact_v<S>) {
        auto r = sqrt_exact(x);
        if (!r) {
            throw PairReadoutError(PairReadoutError::Kind::inexact,
                                   std::string(what) + " has no square root in Q(sqrt2); use the floating path");
        }
        return *r;
    } else {
        return std::sqrt(x);
    }
}

template <class S>
S inv_sqrt2_as() {
    if constexpr (is_exact_v<S>) {
        return CScalar(QScalar::inv_sqrt2());
    } else {
        return FScalar(1.0 / std::sqrt(2.0));
    }
}

template <class S>
real_of_t<S> sparse_norm2(const Sparse<S> &v) {
    real_of_t<S> n{};
    for (const auto &[i, x] : v) {
        n += norm2(x);
    }
    return n;
}

template <class S>
S sparse_inner(const Sparse<S> &x, const Sparse<S> &y) {
    S acc{};
    size_t a = 0;
    size_t b = 0;
    while (a < x.size() && b < y.size()) {
        if (x[a].first < y[b].first) {
            a++;
        } else if (y[b].first < x[a].first) {
            b++;
        } else {
            acc += conj(x[a].second) * y[b].second;
            a++;
            b++;
        }
    }
    return acc;
}

/// Sorts by index, merges duplicates and drops zeros.
template <class S>
Sparse<S> canonical(Sparse<S> v) {
    std::sort(v.begin(), v.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
    Sparse<S> out;
    for (auto &e : v) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
        } else {
            if (!out.empty() && is_zero(out.back().second)) {
                out.pop_back();
            }
            out.push_back(std::move(e));
        }
    }
    if (!out.empty() && is_zero(out.back().second)) {
        out.pop_back();
    }
    return out;
}

template <class S>
Sparse<S> combine(const Sparse<S> &x, const Sparse<S> &y, const S &cx, const S &cy) {
    Sparse<S> v;
    v.reserve(x.size() + y.size());
    for (const auto &[i, a] : x) {
        v.emplace_back(i, cx * a);
    }
    for (const auto &[i, a] : y) {
        v.emplace_back(i, cy * a);
    }
    return canonical(std::move(v));
}

template <class S>
const S *lookup(const Sparse<S> &v, size_t index) {
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto &e, size_t i) { return e.first < i; });
    if (it == v.end() || it->first != index) {
        return nullptr;
    }
    return &it->second;
}

template <class S>
bool vectors_equal(const std::vector<S> &x, const std::vector<S> &y) {
    for (size_t k = 0; k < x.size(); k++) {
        if (!is_zero(x[k] - y[k])) {
            return false;
        }
    }
    return true;
}

/// X = c * (tensor over parties of u_p), each u_p scaled so that its first
/// nonzero entry is 1.
template <class S>
struct Factored {
    S coefficient;
    std::vector<std::vector<S>> locals;
};

template <class S>
std::optional<Factored<S>> factor_product(const PartyLayout &layout, const Sparse<S> &x) {
    size_t g0 = x.front().first;
    const S &v0 = x.front().second;
    size_t n = layout.size();
    std::vector<std::vector<S>> slices(n);
    size_t support = 1;
    for (size_t p = 0; p < n; p++) {
        size_t ld = layout.party(p).local_dim();
        size_t base = layout.strip_party(g0, p);
        slices[p].assign(ld, S{});
        size_t nz = 0;
        for (size_t l = 0; l < ld; l++) {
            if (const S *e = lookup(x, base + layout.local_offset(l, p))) {
                slices[p][l] = *e;
                nz++;
            }
        }
        support *= nz;
    }
    if (support != x.size()) {
        return std::nullopt;
    }
    S v0_pow(1);
    for (size_t k = 1; k < n; k++) {
        v0_pow *= v0;
    }
    for (const auto &[g, v] : x) {
        S prod(1);
        for (size_t p = 0; p < n; p++) {
            prod *= slices[p][layout.local_index(g, p)];
        }
        if (!is_zero(prod - v * v0_pow)) {
            return std::nullopt;
        }
    }
    Factored<S> f;
    S lead_at_g0(1);
    for (size_t p = 0; p < n; p++) {
        auto &s = slices[p];
        size_t lead = 0;
        while (is_zero(s[lead])) {
            lead++;
        }
        S inv = S(1) / s[lead];
        for (auto &e : s) {
            e *= inv;
        }
        lead_at_g0 *= s[layout.local_index(g0, p)];
        f.locals.push_back(std::move(s));
    }
    f.coefficient = v0 / lead_at_g0;
    return f;
}

}  // namespace

template <class S>
Sparse<S> to_sparse(const std::vector<S> &dense) {
    Sparse<S> v;
    for (size_t k = 0; k < dense.size(); k++) {
        if (!is_zero(dense[k])) {
            v.emplace_back(k, dense[k]);
        }
    }
    return v;
}

template <class S>
std::vector<S> to_dense(const Sparse<S> &v, size_t dim) {
    std::vector<S> d(dim);
    for (const auto &[i, x] : v) {
        d.at(i) = x;
    }
    return d;
}

template <class S>
LocalOp<S> LocalOp<S>::from(const Matrix<S> &m) {
    if (!m.is_square()) {
        throw DimensionError("local operator must be square");
    }
    LocalOp<S> op;
    op.dim = m.rows();
    op.cols.resize(op.dim);
    for (size_t r = 0; r < op.dim; r++) {
        for (size_t c = 0; c < op.dim; c++) {
            if (!is_zero(m(r, c))) {
                op.cols[c].emplace_back(r, m(r, c));
            }
        }
    }
    return op;
}

template <class S>
Sparse<S> apply_local(const PartyLayout &layout, size_t party, const LocalOp<S> &op, const Sparse<S> &v) {
    if (op.dim != layout.party(party).local_dim()) {
        throw DimensionError("local operator dimension does not match party '" + layout.party(party).name + "'");
    }
    const S one(1);
    Sparse<S> out;
    for (const auto &[g, x] : v) {
        size_t l = layout.local_index(g, party);
        size_t base = layout.strip_party(g, party);
        for (const auto &[r, m] : op.cols[l]) {
            if (m == one) {
                out.emplace_back(base + layout.local_offset(r, party), x);
            } else {
                out.emplace_back(base + layout.local_offset(r, party), m * x);
            }
        }
    }
    return canonical(std::move(out));
}

template <class S>
Sparse<S> apply_local(const PartyLayout &layout, size_t party, const Matrix<S> &op, const Sparse<S> &v) {
    return apply_local(layout, party, LocalOp<S>::from(op), v);
}

template <class S>
PairReadoutPlan<S> plan_pair_readout(const PartyLayout &layout, const Sparse<S> &plus, const Sparse<S> &minus) {
    using K = PairReadoutError::Kind;
    S half = S(1) / S(2);
    Sparse<S> x0 = combine(plus, minus, half, half);
    Sparse<S> x1 = combine(plus, minus, half, -half);
    if (x0.empty() || x1.empty()) {
        throw PairReadoutError(K::degenerate, "readout pair has a vanishing branch");
    }
    auto f0 = factor_product(layout, x0);
    auto f1 = factor_product(layout, x1);
    if (!f0 || !f1) {
        throw PairReadoutError(K::not_branch_product, "readout pair branches are not fully product");
    }
    PairReadoutPlan<S> plan{layout, {}, {}};
    std::vector<real_of_t<S>> n0;
    std::vector<real_of_t<S>> n1;
    for (size_t p = 0; p < layout.size(); p++) {
        const auto &u0 = f0->locals[p];
        const auto &u1 = f1->locals[p];
        if (vectors_equal(u0, u1)) {
            continue;
        }
        S overlap{};
        for (size_t k = 0; k < u0.size(); k++) {
            overlap += conj(u0[k]) * u1[k];
        }
        if (!is_zero(overlap)) {
            throw PairReadoutError(K::not_branch_product, "party '" + layout.party(p).name +
                                                              "' holds factors that are neither equal nor orthogonal");
        }
        plan.parties.push_back(p);
        real_of_t<S> a{};
        real_of_t<S> b{};
        for (size_t k = 0; k < u0.size(); k++) {
            a += norm2(u0[k]);
            b += norm2(u1[k]);
        }
        n0.push_back(real_sqrt<S>(a, "local factor norm"));
        n1.push_back(real_sqrt<S>(b, "local factor norm"));
    }
    if (plan.parties.empty()) {
        throw PairReadoutError(K::degenerate, "readout pair branches are proportional");
    }
    S a0 = f0->coefficient;
    S a1 = f1->coefficient;
    for (size_t k = 0; k < plan.parties.size(); k++) {
        a0 *= S(n0[k]);
        a1 *= S(n1[k]);
    }
    S w = a1 / a0;
    S phase = w / S(real_sqrt<S>(norm2(w), "branch weight ratio"));
    S h = inv_sqrt2_as<S>();
    for (size_t k = 0; k < plan.parties.size(); k++) {
        size_t p = plan.parties[k];
        S c0 = S(1) / S(n0[k]);
        S c1 = S(1) / S(n1[k]);
        if (k == 0) {
            c1 *= phase;
        }
        const auto &u0 = f0->locals[p];
        const auto &u1 = f1->locals[p];
        std::array<std::vector<S>, 2> e;
        for (int s = 0; s < 2; s++) {
            S sign = s == 0 ? S(1) : S(-1);
            e[s].resize(u0.size());
            for (size_t l = 0; l < u0.size(); l++) {
                e[s][l] = h * (c0 * u0[l] + sign * c1 * u1[l]);
            }
        }
        plan.basis.push_back(std::move(e));
    }
    return plan;
}

template <class S>
std::vector<ReadoutOutcome<S>> pair_readout_execute(const PairReadoutPlan<S> &plan, const Sparse<S> &psi) {
    std::vector<std::array<LocalOp<S>, 2>> proj;
    for (const auto &e : plan.basis) {
        proj.push_back({LocalOp<S>::from(Matrix<S>::outer(e[0], e[0])), LocalOp<S>::from(Matrix<S>::outer(e[1], e[1]))});
    }
    std::vector<ReadoutOutcome<S>> out;
    real_of_t<S> captured{};
    std::function<void(size_t, const Sparse<S> &, std::string)> rec = [&](size_t k, const Sparse<S> &v,
                                                                           std::string signs) {
        if (v.empty()) {
            return;
        }
        if (k == plan.parties.size()) {
            ReadoutOutcome<S> o;
            o.declares_plus = std::count(signs.begin(), signs.end(), '-') % 2 == 0;
            o.signs = std::move(signs);
            o.mass = sparse_norm2(v);
            captured += o.mass;
            out.push_back(std::move(o));
            return;
        }
        for (int s = 0; s < 2; s++) {
            rec(k + 1, apply_local(plan.layout, plan.parties[k], proj[k][s], v), signs + (s == 0 ? '+' : '-'));
        }
    };
    rec(0, psi, "");
    real_of_t<S> rest = sparse_norm2(psi) - captured;
    if (!is_zero(rest)) {
        ReadoutOutcome<S> o;
        o.signs = "none";
        o.completion = true;
        o.mass = rest;
        out.push_back(std::move(o));
    }
    return out;
}

template <class S>
bool RunReportT<S>::totals_ok() const {
    for (const auto &s : states) {
        if (!is_zero(s.total - R(1))) {
            return false;
        }
    }
    return true;
}

namespace {

template <class S>
struct Candidate {
    size_t member;
    Sparse<S> state;
};

template <class S>
class Runner {
   public:
    using R = real_of_t<S>;

    Runner(const StateSetT<S> &set, const ResourceT<S> &resource) : set_(set) {
        layout_ = combined_layout_t(set, resource);
        Sparse<S> anc = to_sparse(resource.amplitudes);
        size_t ad = layout_.ancilla_dim();
        if (resource.amplitudes.size() != ad) {
            throw LayoutError("resource '" + resource.name + "' has " + std::to_string(resource.amplitudes.size()) +
                              " amplitudes, expected " + std::to_string(ad));
        }
        for (size_t m = 0; m < set.members.size(); m++) {
            Sparse<S> sys = to_sparse(set.members[m].ket.amplitudes);
            Sparse<S> joint;
            joint.reserve(sys.size() * anc.size());
            for (const auto &[i, x] : sys) {
                for (const auto &[j, y] : anc) {
                    joint.emplace_back(i * ad + j, x * y);
                }
            }
            initial_.push_back({m, std::move(joint)});
            init_norm_.push_back(sparse_norm2(initial_.back().state));
        }
    }

    const PartyLayout &layout() const { return layout_; }
    const std::vector<Candidate<S>> &initial() const { return initial_; }
    R probability(const Candidate<S> &c) const { return sparse_norm2(c.state) / init_norm_[c.member]; }

    /// Calls leaf(node, path, candidates) for every leaf reached with at least
    /// one candidate; audit(path, candidates) before each measurement.
    template <class LeafFn, class AuditFn>
    void walk(const ProtocolNode &node, const std::string &path, const std::vector<Candidate<S>> &cands, LeafFn &&leaf,
              AuditFn &&audit) const {
        if (cands.empty()) {
            return;
        }
        if (node.is_leaf()) {
            leaf(node, path, cands);
            return;
        }
        audit(path, cands);
        size_t party = layout_.index_of(node.actor);
        for (const auto &b : node.branches) {
            if (!b.child) {
                throw ProtocolError("missing subtree at " + path + "/" + b.outcome);
            }
            const LocalOp<S> &op = local_op(b.op);
            std::vector<Candidate<S>> next;
            for (const auto &c : cands) {
                Sparse<S> v = apply_local(layout_, party, op, c.state);
                if (!v.empty()) {
                    next.push_back({c.member, std::move(v)});
                }
            }
            walk(*b.child, path + "/" + b.outcome, next, leaf, audit);
        }
    }

    static PartyLayout combined_layout_t(const StateSetT<S> &set, const ResourceT<S> &resource) {
        const auto &sys = set.layout;
        const auto &res = resource.layout;
        if (sys.size() != res.size()) {
            throw LayoutError("resource '" + resource.name + "' and set '" + set.name + "' have different parties");
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

   private:
    const LocalOp<S> &local_op(const ExactMatrix &m) const {
        auto it = ops_.find(&m);
        if (it == ops_.end()) {
            it = ops_.emplace(&m, LocalOp<S>::from(op_as<S>(m))).first;
        }
        return it->second;
    }

    mutable std::map<const ExactMatrix *, LocalOp<S>> ops_;
    const StateSetT<S> &set_;
    PartyLayout layout_;
    std::vector<Candidate<S>> initial_;
    std::vector<R> init_norm_;
};

}  // namespace

template <class S>
RunReportT<S> run_exhaustive(const ProtocolTree &p, const StateSetT<S> &set, const ResourceT<S> &resource,
                             const std::optional<std::vector<real_of_t<S>>> &prior) {
    using R = real_of_t<S>;
    using Report = RunReportT<S>;
    if (!p.root) {
        throw ProtocolError("protocol '" + p.name + "' has no root");
    }
    Runner<S> runner(set, resource);
    Report report;
    report.protocol = p.name;
    report.set = set.name;
    report.resource = resource.name;
    size_t n = set.members.size();
    std::vector<R> weights;
    if (prior) {
        if (prior->size() != n) {
            throw ProtocolError("prior has " + std::to_string(prior->size()) + " entries for " + std::to_string(n) +
                                " members");
        }
        weights = *prior;
    } else {
        for (size_t k = 0; k < n; k++) {
            weights.push_back(R(1) / R(static_cast<long>(n)));
        }
    }
    for (size_t k = 0; k < n; k++) {
        report.states.push_back({set.members[k].label, weights[k], R{}, R{}, {}});
    }
    const PartyLayout &layout = runner.layout();

    auto record = [&](size_t member, const std::string &path, const std::string &declared, const R &prob) {
        auto &st = report.states[member];
        bool ok = !declared.empty() && declared == st.label;
        st.leaves.push_back({path, declared, prob, ok});
        st.total += prob;
        if (ok) {
            st.success += prob;
        }
    };

    auto audit = [&](const std::string &path, const std::vector<Candidate<S>> &cands) {
        report.audited_nodes++;
        for (size_t a = 0; a < cands.size(); a++) {
            for (size_t b = a + 1; b < cands.size(); b++) {
                if (!is_zero(sparse_inner(cands[a].state, cands[b].state))) {
                    report.audit_failures.push_back(
                        {path, set.members[cands[a].member].label, set.members[cands[b].member].label});
                }
            }
        }
    };

    auto leaf = [&](const ProtocolNode &node, const std::string &path, const std::vector<Candidate<S>> &cands) {
        const LeafAction &act = *node.leaf;
        if (act.kind == LeafAction::Kind::declare || act.kind == LeafAction::Kind::reject) {
            std::string declared = act.kind == LeafAction::Kind::declare ? act.label : "";
            for (const auto &c : cands) {
                record(c.member, path, declared, runner.probability(c));
            }
            return;
        }
        const Candidate<S> *plus = nullptr;
        const Candidate<S> *minus = nullptr;
        for (const auto &c : cands) {
            const std::string &l = set.members[c.member].label;
            if (l == act.label) {
                plus = &c;
            } else if (l == act.minus_label) {
                minus = &c;
            }
        }
        if (plus == nullptr || minus == nullptr) {
            // At most one label of the pair survived: declare it outright.
            std::string declared = plus ? act.label : (minus ? act.minus_label : "");
            for (const auto &c : cands) {
                record(c.member, path, declared, runner.probability(c));
            }
            return;
        }
        audit(path, cands);
        std::optional<PairReadoutPlan<S>> plan;
        try {
            plan = plan_pair_readout(layout, plus->state, minus->state);
        } catch (const PairReadoutError &e) {
            report.issues.push_back({path, e.what()});
            for (const auto &c : cands) {
                record(c.member, path + "/readout:error", "", runner.probability(c));
            }
            return;
        }
        for (const auto &c : cands) {
            R to_plus{};
            R to_minus{};
            R none{};
            for (const auto &o : pair_readout_execute(*plan, c.state)) {
                if (o.completion) {
                    none += o.mass;
                } else if (o.declares_plus) {
                    to_plus += o.mass;
                } else {
                    to_minus += o.mass;
                }
            }
            const R &norm = runner.probability(c) / sparse_norm2(c.state);
            if (!is_zero(to_plus)) {
                record(c.member, path + "/readout:even", act.label, to_plus * norm);
            }
            if (!is_zero(to_minus)) {
                record(c.member, path + "/readout:odd", act.minus_label, to_minus * norm);
            }
            if (!is_zero(none)) {
                record(c.member, path + "/readout:none", "", none * norm);
            }
        }
    };

    runner.walk(*p.root, "root", runner.initial(), leaf, audit);
    R total{};
    for (const auto &st : report.states) {
        total += st.weight * st.success;
    }
    report.success = total;
    return report;
}

template <class S>
std::vector<Residual<S>> leaf_residuals(const ProtocolNode &root, const StateSetT<S> &set,
                                        const ResourceT<S> &resource) {
    Runner<S> runner(set, resource);
    std::vector<Residual<S>> out;
    runner.walk(
        root, "root", runner.initial(),
        [&](const ProtocolNode &, const std::string &path, const std::vector<Candidate<S>> &cands) {
            for (const auto &c : cands) {
                out.push_back({path, set.members[c.member].label, c.state});
            }
        },
        [](const std::string &, const std::vector<Candidate<S>> &) {});
    return out;
}

/// Scales v to unit norm. Returns false (leaving v unchanged) when the exact
/// norm is not in Q(sqrt2).
static bool normalize_share(std::vector<CScalar> &v) {
    QScalar n2;
    for (const auto &x : v) {
        n2 += x.norm2();
    }
    auto n = sqrt_exact(n2);
    if (!n || n->is_zero()) {
        return false;
    }
    CScalar inv(n->inv());
    for (auto &x : v) {
        x *= inv;
    }
    return true;
}

static bool normalize_share(std::vector<FScalar> &v) {
    double n2 = 0;
    for (const auto &x : v) {
        n2 += std::norm(x);
    }
    if (n2 <= 0) {
        return false;
    }
    for (auto &x : v) {
        x /= std::sqrt(n2);
    }
    return true;
}

template <class S>
std::vector<ResourceT<S>> split_resource(const ResourceT<S> &resource, const SequentialTask &task) {
    if (task.rounds == 0) {
        throw ProtocolError("a sequential task needs at least one round");
    }
    if (task.partition.size() != task.rounds) {
        throw ProtocolError("partition lists " + std::to_string(task.partition.size()) + " rounds, task has " +
                            std::to_string(task.rounds));
    }
    const auto &parties = resource.layout.parties();
    size_t factors = parties.empty() ? 0 : parties.front().ancilla.size();
    for (const auto &p : parties) {
        if (p.ancilla.size() != factors) {
            throw ProtocolError("parties of '" + resource.name + "' hold different numbers of ancilla factors");
        }
    }
    std::map<size_t, size_t> owner;
    for (size_t r = 0; r < task.rounds; r++) {
        for (size_t f : task.partition[r]) {
            if (f >= factors) {
                throw ProtocolError("round " + std::to_string(r + 1) + " uses ancilla factor " + std::to_string(f) +
                                    " but parties hold " + std::to_string(factors));
            }
            auto [it, fresh] = owner.emplace(f, r);
            if (!fresh) {
                throw ProtocolError("partition overlap: ancilla factor " + std::to_string(f) + " assigned to rounds " +
                                    std::to_string(it->second + 1) + " and " + std::to_string(r + 1));
            }
        }
    }
    // Unlisted factors form a trailing discard group that must also split off.
    std::vector<std::vector<size_t>> groups = task.partition;
    std::vector<size_t> rest;
    for (size_t f = 0; f < factors; f++) {
        if (!owner.count(f)) {
            rest.push_back(f);
        }
    }
    if (!rest.empty()) {
        groups.push_back(rest);
    }

    // Digit strides of every (party, factor) within the resource index.
    size_t np = parties.size();
    std::vector<std::vector<size_t>> stride(np, std::vector<size_t>(factors));
    size_t s = 1;
    for (size_t p = np; p-- > 0;) {
        for (size_t f = factors; f-- > 0;) {
            stride[p][f] = s;
            s *= parties[p].ancilla[f];
        }
    }
    size_t dim = s;
    if (resource.amplitudes.size() != dim) {
        throw ProtocolError("resource '" + resource.name + "' amplitude count does not match its layout");
    }
    auto digit = [&](size_t g, size_t p, size_t f) { return (g / stride[p][f]) % parties[p].ancilla[f]; };
    // Index of g within group k (parties in order, the group's factors in listed order).
    auto group_index = [&](size_t g, size_t k) {
        size_t idx = 0;
        for (size_t p = 0; p < np; p++) {
            for (size_t f : groups[k]) {
                idx = idx * parties[p].ancilla[f] + digit(g, p, f);
            }
        }
        return idx;
    };
    auto group_dim = [&](size_t k) {
        size_t d = 1;
        for (size_t p = 0; p < np; p++) {
            for (size_t f : groups[k]) {
                d *= parties[p].ancilla[f];
            }
        }
        return d;
    };
    size_t g0 = 0;
    while (g0 < dim && is_zero(resource.amplitudes[g0])) {
        g0++;
    }
    if (g0 == dim) {
        throw ProtocolError("resource '" + resource.name + "' is zero");
    }
    const S &v0 = resource.amplitudes[g0];
    std::vector<std::vector<S>> slices;
    for (size_t k = 0; k < groups.size(); k++) {
        slices.emplace_back(group_dim(k));
    }
    std::set<size_t> in_group;
    for (size_t g = 0; g < dim; g++) {
        // g lies on group k's slice through g0 when every other factor digit matches g0.
        for (size_t k = 0; k < groups.size(); k++) {
            bool on_slice = true;
            for (size_t p = 0; p < np && on_slice; p++) {
                for (size_t f = 0; f < factors; f++) {
                    bool mine = std::find(groups[k].begin(), groups[k].end(), f) != groups[k].end();
                    if (!mine && digit(g, p, f) != digit(g0, p, f)) {
                        on_slice = false;
                        break;
                    }
                }
            }
            if (on_slice) {
                slices[k][group_index(g, k)] = resource.amplitudes[g];
            }
        }
    }
    S v0_pow(1);
    for (size_t k = 1; k < groups.size(); k++) {
        v0_pow *= v0;
    }
    for (size_t g = 0; g < dim; g++) {
        S prod(1);
        for (size_t k = 0; k < groups.size(); k++) {
            prod *= slices[k][group_index(g, k)];
        }
        if (!is_zero(prod - resource.amplitudes[g] * v0_pow)) {
            throw ProtocolError("resource '" + resource.name + "' does not factor across the round partition");
        }
    }
    std::vector<ResourceT<S>> out;
    for (size_t r = 0; r < task.rounds; r++) {
        std::vector<Party> ps;
        for (const auto &p : parties) {
            std::vector<size_t> anc;
            for (size_t f : groups[r]) {
                anc.push_back(p.ancilla[f]);
            }
            ps.push_back(Party{p.name, 1, anc, {}});
        }
        std::string name = task.rounds == 1 && rest.empty() ? resource.name
                                                             : resource.name + "[round " + std::to_string(r + 1) + "]";
        std::string note = resource.note;
        if (!normalize_share(slices[r])) {
            note += note.empty() ? "unnormalized share" : "; unnormalized share";
        }
        out.push_back({name, PartyLayout(std::move(ps)), slices[r], note});
    }
    return out;
}

template <class S>
SequentialReportT<S> run_sequential(const SequentialTask &task, const StateSetT<S> &set, const ResourceT<S> &resource,
                                    const std::vector<ProtocolTree> &protocols) {
    if (protocols.size() != 1 && protocols.size() != task.rounds) {
        throw ProtocolError("expected 1 or " + std::to_string(task.rounds) + " protocols, got " +
                            std::to_string(protocols.size()));
    }
    auto parts = split_resource(resource, task);
    SequentialReportT<S> out;
    out.success = real_of_t<S>(1);
    for (size_t r = 0; r < task.rounds; r++) {
        const ProtocolTree &p = protocols.size() == 1 ? protocols[0] : protocols[r];
        out.rounds.push_back(run_exhaustive(p, set, parts[r]));
        out.success *= out.rounds.back().success;
    }
    return out;
}

#define GNPS_INSTANTIATE(S)                                                                                          \
    template Sparse<S> to_sparse(const std::vector<S> &);                                                            \
    template std::vector<S> to_dense(const Sparse<S> &, size_t);                                                     \
    template struct LocalOp<S>;                                                                                      \
    template Sparse<S> apply_local(const PartyLayout &, size_t, const LocalOp<S> &, const Sparse<S> &);              \
    template Sparse<S> apply_local(const PartyLayout &, size_t, const Matrix<S> &, const Sparse<S> &);               \
    template PairReadoutPlan<S> plan_pair_readout(const PartyLayout &, const Sparse<S> &, const Sparse<S> &);        \
    template std::vector<ReadoutOutcome<S>> pair_readout_execute(const PairReadoutPlan<S> &, const Sparse<S> &);     \
    template struct RunReportT<S>;                                                                                   \
    template RunReportT<S> run_exhaustive(const ProtocolTree &, const StateSetT<S> &, const ResourceT<S> &,           \
                                          const std::optional<std::vector<real_of_t<S>>> &);                         \
    template std::vector<Residual<S>> leaf_residuals(const ProtocolNode &, const StateSetT<S> &, const ResourceT<S> &); \
    template std::vector<ResourceT<S>> split_resource(const ResourceT<S> &, const SequentialTask &);                 \
    template SequentialReportT<S> run_sequential(const SequentialTask &, const StateSetT<S> &, const ResourceT<S> &,  \
                                                 const std::vector<ProtocolTree> &);

GNPS_INSTANTIATE(CScalar)
GNPS_INSTANTIATE(FScalar)

#undef GNPS_INSTANTIATE

}  // namespace gnps
