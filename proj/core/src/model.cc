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

#include "gnps/model.h"

#include <cmath>
#include <map>
#include <set>

#include "gnps/linalg.h"

namespace gnps {

namespace {

template <class S>
std::vector<S> kron_vec(const std::vector<S> &a, const std::vector<S> &b) {
    std::vector<S> out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++) {
        if (is_zero(a[i])) {
            continue;
        }
        for (size_t j = 0; j < b.size(); j++) {
            if (!is_zero(b[j])) {
                out[i * b.size() + j] = a[i] * b[j];
            }
        }
    }
    return out;
}

template <class S>
S local_inner(const std::vector<S> &x, const std::vector<S> &y) {
    S acc{};
    for (size_t k = 0; k < x.size(); k++) {
        if (!is_zero(x[k]) && !is_zero(y[k])) {
            acc += conj(x[k]) * y[k];
        }
    }
    return acc;
}

template <class S>
S member_inner(const Member<S> &x, const Member<S> &y) {
    if (x.is_product() && y.is_product() && x.locals.size() == y.locals.size()) {
        S acc(1);
        for (size_t p = 0; p < x.locals.size(); p++) {
            acc *= local_inner(x.locals[p], y.locals[p]);
            if (is_zero(acc)) {
                return S{};
            }
        }
        return acc;
    }
    return inner(x.ket, y.ket);
}

bool is_one(const QScalar &x) { return x == QScalar(1); }
bool is_one(double x) { return std::abs(x - 1.0) <= float_tolerance(); }

/// Joint indices of the grouped parties (row-major over the group order)
/// and of the remaining parties.
struct Split {
    std::vector<size_t> group;
    std::vector<size_t> rest;
    size_t group_dim = 1;
    size_t rest_dim = 1;

    Split(const PartyLayout &layout, const std::vector<std::string> &names) {
        std::set<size_t> chosen;
        for (const auto &n : names) {
            size_t p = layout.index_of(n);
            if (!chosen.insert(p).second) {
                throw LayoutError("party '" + n + "' listed twice in a cut");
            }
            group.push_back(p);
        }
        for (size_t p = 0; p < layout.size(); p++) {
            if (!chosen.count(p)) {
                rest.push_back(p);
            }
        }
        for (size_t p : group) {
            group_dim *= layout.party(p).local_dim();
        }
        for (size_t p : rest) {
            rest_dim *= layout.party(p).local_dim();
        }
    }

    static size_t joint(const PartyLayout &layout, const std::vector<size_t> &parties, size_t global) {
        size_t idx = 0;
        for (size_t p : parties) {
            idx = idx * layout.party(p).local_dim() + layout.local_index(global, p);
        }
        return idx;
    }
};

template <class S>
bool psd_ldl(Matrix<S> a) {
    if (!a.is_hermitian()) {
        return false;
    }
    size_t n = a.rows();
    for (size_t k = 0; k < n; k++) {
        auto d = real_part(a(k, k));
        if (is_zero(d)) {
            for (size_t i = k + 1; i < n; i++) {
                if (!is_zero(a(i, k))) {
                    return false;
                }
            }
            continue;
        }
        if (d < decltype(d)(0)) {
            return false;
        }
        S inv_d = S(1) / a(k, k);
        for (size_t i = k + 1; i < n; i++) {
            if (is_zero(a(i, k))) {
                continue;
            }
            S f = a(i, k) * inv_d;
            for (size_t j = k + 1; j < n; j++) {
                if (!is_zero(a(k, j))) {
                    a(i, j) -= f * a(k, j);
                }
            }
        }
    }
    return true;
}

}  // namespace

template <class S>
Ket<S>::Ket(PartyLayout l, std::vector<S> amps) : layout(std::move(l)), amplitudes(std::move(amps)) {
    if (amplitudes.size() != layout.total_dim()) {
        throw DimensionError("ket length " + std::to_string(amplitudes.size()) + " does not match layout dimension " +
                             std::to_string(layout.total_dim()));
    }
}

template <class S>
Ket<S> Ket<S>::basis(PartyLayout l, const std::vector<size_t> &digits) {
    if (digits.size() != l.size() || l.has_ancilla()) {
        throw LayoutError("basis state needs one digit per system party");
    }
    size_t idx = 0;
    for (size_t p = 0; p < l.size(); p++) {
        if (digits[p] >= l.party(p).dim) {
            throw LayoutError("basis digit out of range for party '" + l.party(p).name + "'");
        }
        idx += digits[p] * l.system_stride(p);
    }
    std::vector<S> amps(l.total_dim());
    amps[idx] = S(1);
    return Ket(std::move(l), std::move(amps));
}

template <class S>
real_of_t<S> Ket<S>::norm2() const {
    real_of_t<S> acc{};
    for (const auto &a : amplitudes) {
        if (!is_zero(a)) {
            acc += gnps::norm2(a);
        }
    }
    return acc;
}

template <class S>
bool Ket<S>::is_normalized() const {
    return is_one(norm2());
}

template <class S>
Ket<S> tensor(const std::vector<Ket<S>> &kets) {
    std::vector<Party> parties;
    std::vector<S> amps{S(1)};
    for (const auto &k : kets) {
        if (k.layout.has_ancilla()) {
            throw LayoutError("tensor expects system-only kets");
        }
        for (const auto &p : k.layout.parties()) {
            parties.push_back(p);
        }
        amps = kron_vec(amps, k.amplitudes);
    }
    return Ket<S>(PartyLayout(std::move(parties)), std::move(amps));
}

template <class S>
S inner(const Ket<S> &x, const Ket<S> &y) {
    if (!x.layout.same_shape(y.layout)) {
        throw LayoutError("inner product of kets with different layouts");
    }
    S acc{};
    for (size_t k = 0; k < x.amplitudes.size(); k++) {
        if (!is_zero(x.amplitudes[k]) && !is_zero(y.amplitudes[k])) {
            acc += conj(x.amplitudes[k]) * y.amplitudes[k];
        }
    }
    return acc;
}

template <class S>
Matrix<S> single_party_marginal(const Ket<S> &state, std::string_view party) {
    const auto &layout = state.layout;
    size_t p = layout.index_of(party);
    size_t d = layout.party(p).local_dim();
    std::map<size_t, std::vector<std::pair<size_t, S>>> by_rest;
    for (size_t g = 0; g < state.amplitudes.size(); g++) {
        if (!is_zero(state.amplitudes[g])) {
            by_rest[layout.strip_party(g, p)].emplace_back(layout.local_index(g, p), state.amplitudes[g]);
        }
    }
    Matrix<S> rho(d, d);
    for (const auto &[rest, entries] : by_rest) {
        for (const auto &[k, a] : entries) {
            for (const auto &[l, b] : entries) {
                rho(k, l) += a * conj(b);
            }
        }
    }
    return rho;
}

template <class S>
size_t schmidt_rank(const Ket<S> &state, const std::vector<std::string> &group) {
    Split split(state.layout, group);
    if (split.group.empty() || split.rest.empty()) {
        throw LayoutError("a cut needs parties on both sides");
    }
    std::map<size_t, SparseRow<S>> rows;
    for (size_t g = 0; g < state.amplitudes.size(); g++) {
        if (is_zero(state.amplitudes[g])) {
            continue;
        }
        size_t r = Split::joint(state.layout, split.group, g);
        size_t c = Split::joint(state.layout, split.rest, g);
        rows[r].emplace_back(static_cast<uint32_t>(c), state.amplitudes[g]);
    }
    Eliminator<S> elim(split.rest_dim);
    for (auto &[r, row] : rows) {
        std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        elim.add_row(std::move(row));
    }
    return elim.rank();
}

template <class S>
bool lu_relabel_check(const Ket<S> &x, const Ket<S> &y, const std::vector<std::vector<size_t>> &perms) {
    const auto &layout = x.layout;
    if (!layout.same_shape(y.layout)) {
        throw LayoutError("relabel check needs kets with the same per-party dimensions");
    }
    if (perms.size() != layout.size()) {
        throw LayoutError("malformed permutation: need one permutation per party");
    }
    for (size_t p = 0; p < layout.size(); p++) {
        size_t d = layout.party(p).local_dim();
        if (perms[p].size() != d) {
            throw LayoutError("malformed permutation for party '" + layout.party(p).name + "'");
        }
        std::vector<bool> seen(d, false);
        for (size_t v : perms[p]) {
            if (v >= d || seen[v]) {
                throw LayoutError("malformed permutation for party '" + layout.party(p).name + "'");
            }
            seen[v] = true;
        }
    }
    std::vector<S> relabeled(x.amplitudes.size());
    for (size_t g = 0; g < x.amplitudes.size(); g++) {
        if (is_zero(x.amplitudes[g])) {
            continue;
        }
        size_t target = 0;
        for (size_t p = 0; p < layout.size(); p++) {
            target += layout.local_offset(perms[p][layout.local_index(g, p)], p);
        }
        relabeled[target] = x.amplitudes[g];
    }
    for (size_t g = 0; g < relabeled.size(); g++) {
        if (!is_zero(relabeled[g] - y.amplitudes[g])) {
            return false;
        }
    }
    return true;
}

template <class S>
Ket<S> group_parties(const Ket<S> &state,
                     const std::vector<std::pair<std::string, std::vector<std::string>>> &groups) {
    const auto &layout = state.layout;
    if (layout.has_ancilla()) {
        throw LayoutError("group_parties expects a system-only ket");
    }
    std::vector<Party> parties;
    std::vector<std::vector<size_t>> members;
    std::set<size_t> used;
    for (const auto &[name, parts] : groups) {
        Party merged{name, 1, {}, {}};
        std::vector<size_t> idx;
        for (const auto &part : parts) {
            size_t p = layout.index_of(part);
            if (!used.insert(p).second) {
                throw LayoutError("party '" + part + "' assigned to two groups");
            }
            merged.dim *= layout.party(p).dim;
            idx.push_back(p);
        }
        parties.push_back(std::move(merged));
        members.push_back(std::move(idx));
    }
    if (used.size() != layout.size()) {
        throw LayoutError("groups must cover every party");
    }
    PartyLayout out_layout(std::move(parties));
    std::vector<S> amps(out_layout.total_dim());
    for (size_t g = 0; g < state.amplitudes.size(); g++) {
        if (is_zero(state.amplitudes[g])) {
            continue;
        }
        size_t target = 0;
        for (size_t q = 0; q < members.size(); q++) {
            size_t local = Split::joint(layout, members[q], g);
            target += local * out_layout.system_stride(q);
        }
        amps[target] = state.amplitudes[g];
    }
    return Ket<S>(std::move(out_layout), std::move(amps));
}

bool is_positive_semidefinite(const Matrix<CScalar> &m) {
    return psd_ldl(m);
}

bool is_positive_semidefinite(const Matrix<FScalar> &m) {
    return psd_ldl(m);
}

template <class S>
Ket<S> ProductState<S>::flatten() const {
    if (locals.size() != layout.size()) {
        throw LayoutError("product state needs one local factor per party");
    }
    std::vector<S> amps{S(1)};
    for (size_t p = 0; p < locals.size(); p++) {
        if (locals[p].size() != layout.party(p).local_dim()) {
            throw DimensionError("local factor of party '" + layout.party(p).name + "' has the wrong dimension");
        }
        amps = kron_vec(amps, locals[p]);
    }
    return Ket<S>(layout, std::move(amps));
}

template <class S>
Member<S> product_member(const PartyLayout &layout, std::string label, std::vector<std::vector<S>> locals) {
    ProductState<S> ps{layout, std::move(locals), label};
    Ket<S> ket = ps.flatten();
    return Member<S>{std::move(label), std::move(ps.locals), std::move(ket)};
}

template <class S>
std::optional<size_t> StateSetT<S>::find(std::string_view label) const {
    for (size_t k = 0; k < members.size(); k++) {
        if (members[k].label == label) {
            return k;
        }
    }
    return std::nullopt;
}

template <class S>
const Member<S> &StateSetT<S>::member(std::string_view label) const {
    auto k = find(label);
    if (!k) {
        throw InvariantError("set '" + name + "' has no member '" + std::string(label) + "'");
    }
    return members[*k];
}

template <class S>
void StateSetT<S>::verify() const {
    std::set<std::string> labels;
    for (const auto &m : members) {
        if (!labels.insert(m.label).second) {
            throw InvariantError("set '" + name + "': duplicate label '" + m.label + "'");
        }
        if (!m.ket.layout.same_shape(layout)) {
            throw InvariantError("set '" + name + "': member '" + m.label + "' has a different layout");
        }
        if (!m.ket.is_normalized()) {
            throw InvariantError("set '" + name + "': member '" + m.label + "' is not normalized");
        }
    }
    auto bad = non_orthogonal_pairs(*this);
    if (!bad.empty()) {
        throw InvariantError("set '" + name + "': members '" + bad.front().first + "' and '" + bad.front().second +
                             "' are not orthogonal");
    }
}

template <class S>
std::vector<std::pair<std::string, std::string>> non_orthogonal_pairs(const StateSetT<S> &set) {
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < set.members.size(); i++) {
        for (size_t j = i + 1; j < set.members.size(); j++) {
            if (!is_zero(member_inner(set.members[i], set.members[j]))) {
                out.emplace_back(set.members[i].label, set.members[j].label);
            }
        }
    }
    return out;
}

template <class S>
Ket<S> ResourceT<S>::as_ket() const {
    std::vector<Party> parties;
    for (const auto &p : layout.parties()) {
        parties.push_back(Party{p.name, p.ancilla_dim(), {}, {}});
    }
    return Ket<S>(PartyLayout(std::move(parties)), amplitudes);
}

template <class S>
ResourceT<S> make_resource(std::string name, const Ket<S> &state,
                           const std::vector<std::pair<std::string, std::vector<std::string>>> &shares,
                           std::string note) {
    Ket<S> grouped = group_parties(state, shares);
    std::vector<Party> parties;
    for (const auto &[party, parts] : shares) {
        Party p{party, 1, {}, {}};
        for (const auto &part : parts) {
            p.ancilla.push_back(state.layout.party(state.layout.index_of(part)).dim);
        }
        parties.push_back(std::move(p));
    }
    ResourceT<S> r{std::move(name), PartyLayout(std::move(parties)), std::move(grouped.amplitudes), std::move(note)};
    return r;
}

template <class S>
Ket<S> attach_resource(const Ket<S> &member, const ResourceT<S> &resource) {
    const auto &ml = member.layout;
    const auto &rl = resource.layout;
    if (ml.has_ancilla()) {
        throw LayoutError("member already carries ancillas");
    }
    if (ml.size() != rl.size()) {
        throw LayoutError("resource '" + resource.name + "' has a different party count than the set");
    }
    std::vector<std::vector<size_t>> anc;
    for (size_t p = 0; p < ml.size(); p++) {
        if (ml.party(p).name != rl.party(p).name) {
            throw LayoutError("resource party '" + rl.party(p).name + "' does not match set party '" +
                              ml.party(p).name + "'");
        }
        anc.push_back(rl.party(p).ancilla);
    }
    return Ket<S>(ml.with_ancillas(anc), kron_vec(member.amplitudes, resource.amplitudes));
}

Ket<FScalar> to_float(const Ket<CScalar> &k) {
    std::vector<FScalar> amps;
    amps.reserve(k.amplitudes.size());
    for (const auto &a : k.amplitudes) {
        amps.push_back(a.to_complex());
    }
    return Ket<FScalar>(k.layout, std::move(amps));
}

StateSetT<FScalar> to_float(const StateSet &s) {
    StateSetT<FScalar> out{s.name, s.layout, {}, s.status_note};
    for (const auto &m : s.members) {
        Member<FScalar> fm{m.label, {}, to_float(m.ket)};
        for (const auto &local : m.locals) {
            std::vector<FScalar> l;
            for (const auto &a : local) {
                l.push_back(a.to_complex());
            }
            fm.locals.push_back(std::move(l));
        }
        out.members.push_back(std::move(fm));
    }
    return out;
}

ResourceT<FScalar> to_float(const Resource &r) {
    std::vector<FScalar> amps;
    for (const auto &a : r.amplitudes) {
        amps.push_back(a.to_complex());
    }
    return ResourceT<FScalar>{r.name, r.layout, std::move(amps), r.note};
}

#define GNPS_INSTANTIATE_MODEL(S)                                                                              \
    template struct Ket<S>;                                                                                    \
    template Ket<S> tensor(const std::vector<Ket<S>> &);                                                       \
    template S inner(const Ket<S> &, const Ket<S> &);                                                          \
    template Matrix<S> single_party_marginal(const Ket<S> &, std::string_view);                                \
    template size_t schmidt_rank(const Ket<S> &, const std::vector<std::string> &);                            \
    template bool lu_relabel_check(const Ket<S> &, const Ket<S> &, const std::vector<std::vector<size_t>> &);  \
    template Ket<S> group_parties(const Ket<S> &,                                                              \
                                  const std::vector<std::pair<std::string, std::vector<std::string>>> &);      \
    template struct ProductState<S>;                                                                           \
    template Member<S> product_member(const PartyLayout &, std::string, std::vector<std::vector<S>>);          \
    template struct StateSetT<S>;                                                                              \
    template std::vector<std::pair<std::string, std::string>> non_orthogonal_pairs(const StateSetT<S> &);      \
    template struct ResourceT<S>;                                                                              \
    template ResourceT<S> make_resource(std::string, const Ket<S> &,                                           \
                                        const std::vector<std::pair<std::string, std::vector<std::string>>> &, \
                                        std::string);                                                          \
    template Ket<S> attach_resource(const Ket<S> &, const ResourceT<S> &);

GNPS_INSTANTIATE_MODEL(CScalar)
GNPS_INSTANTIATE_MODEL(FScalar)

}  // namespace gnps
