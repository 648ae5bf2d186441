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


#include "gnps/catalog.h"

#include <map>

namespace gnps {

namespace {

CScalar half() {
    return CScalar(QScalar::ratio(1, 2));
}

CScalar inv_sqrt2() {
    return CScalar(QScalar::inv_sqrt2());
}

std::string sign_char(int s) {
    return s > 0 ? "+" : "-";
}

PartyLayout labelled_layout(const std::vector<std::pair<std::string, std::vector<std::string>>> &parties) {
    std::vector<Party> out;
    for (const auto &[name, labels] : parties) {
        out.push_back(Party{name, labels.size(), {}, labels});
    }
    return PartyLayout(std::move(out));
}

std::vector<std::string> numeric_labels(size_t first, size_t count) {
    std::vector<std::string> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back(std::to_string(first + k));
    }
    return out;
}

StateSet finish(StateSet set) {
    set.verify();
    return set;
}

/// G_{m+1}; Alice levels p, q, 1..m map to 0, 1, 2..m+1 and Bob-k's levels
/// p, q, k map to 0, 1, 2.
StateSet build_g_impl(size_t m, const std::vector<std::string> &names, std::string set_name) {
    std::vector<std::pair<std::string, std::vector<std::string>>> parties;
    std::vector<std::string> alice{"p", "q"};
    for (size_t i = 1; i <= m; i++) {
        alice.push_back(std::to_string(i));
    }
    parties.emplace_back(names[0], alice);
    for (size_t k = 1; k <= m; k++) {
        parties.emplace_back(names[k], std::vector<std::string>{"p", "q", std::to_string(k)});
    }
    PartyLayout layout = labelled_layout(parties);
    size_t da = m + 2;
    constexpr size_t kP = 0;
    constexpr size_t kQ = 1;
    constexpr size_t kTag = 2;

    auto tags = [&](std::vector<std::vector<CScalar>> locals) {
        // Bob slots left empty carry their fixed tag |k> (level 2).
        for (size_t k = 1; k <= m; k++) {
            if (locals[k].empty()) {
                locals[k] = basis_vector(3, kTag);
            }
        }
        return locals;
    };

    StateSet set{std::move(set_name), layout, {}, "genuinely nonlocal product set (published construction); recorded claim"};
    auto add = [&](const std::string &label, std::vector<std::vector<CScalar>> locals) {
        set.members.push_back(product_member<CScalar>(layout, label, tags(std::move(locals))));
    };
    for (int s : {1, -1}) {
        std::vector<std::vector<CScalar>> locals(m + 1);
        locals[0] = pair_superposition(da, kP, kQ, s);
        add("zeta0" + sign_char(s), locals);
    }
    for (size_t i = 1; i <= m; i++) {
        std::string base = "zeta" + std::to_string(i) + ".";
        size_t alice_i = i + 1;
        for (int s : {1, -1}) {
            std::vector<std::vector<CScalar>> locals(m + 1);
            locals[0] = basis_vector(da, alice_i);
            locals[i] = pair_superposition(3, kQ, kTag, s);
            add(base + "1" + sign_char(s), locals);
        }
        for (int s : {1, -1}) {
            std::vector<std::vector<CScalar>> locals(m + 1);
            locals[0] = pair_superposition(da, kQ, alice_i, s);
            locals[i] = basis_vector(3, kP);
            add(base + "2" + sign_char(s), locals);
        }
        for (int s : {1, -1}) {
            std::vector<std::vector<CScalar>> locals(m + 1);
            locals[0] = basis_vector(da, kP);
            locals[i] = pair_superposition(3, kP, kQ, s);
            add(base + "3" + sign_char(s), locals);
        }
    }
    return finish(std::move(set));
}

}  // namespace

std::vector<std::array<int, 3>> QuadSuperposition::sign_triples() {
    return {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
}

std::vector<CScalar> QuadSuperposition::vector(size_t dim) const {
    std::vector<CScalar> v(dim);
    v.at(levels[0]) = half();
    for (size_t k = 0; k < 3; k++) {
        v.at(levels[k + 1]) = signs[k] ? -half() : half();
    }
    return v;
}

std::string QuadSuperposition::suffix() const {
    return "_" + std::to_string(signs[0]) + std::to_string(signs[1]) + std::to_string(signs[2]);
}

std::vector<CScalar> pair_superposition(size_t dim, size_t a, size_t b, int sign) {
    std::vector<CScalar> v(dim);
    v.at(a) = inv_sqrt2();
    v.at(b) = sign > 0 ? inv_sqrt2() : -inv_sqrt2();
    return v;
}

std::vector<CScalar> basis_vector(size_t dim, size_t level) {
    std::vector<CScalar> v(dim);
    v.at(level) = CScalar(1);
    return v;
}

StateSet build_s_ben() {
    PartyLayout layout = labelled_layout({{"A", {"0", "1", "2"}}, {"B", {"0", "1", "2"}}});
    StateSet set{"S_Ben", layout, {}, "nonlocal product set (published construction); recorded claim"};
    auto e = [](size_t k) { return basis_vector(3, k); };
    for (int s : {1, -1}) {
        set.members.push_back(product_member<CScalar>(layout, "0,eta" + sign_char(s), {e(0), pair_superposition(3, 0, 1, s)}));
    }
    for (int s : {1, -1}) {
        set.members.push_back(product_member<CScalar>(layout, "eta" + sign_char(s) + ",2", {pair_superposition(3, 0, 1, s), e(2)}));
    }
    for (int s : {1, -1}) {
        set.members.push_back(product_member<CScalar>(layout, "2,xi" + sign_char(s), {e(2), pair_superposition(3, 1, 2, s)}));
    }
    for (int s : {1, -1}) {
        set.members.push_back(product_member<CScalar>(layout, "xi" + sign_char(s) + ",0", {pair_superposition(3, 1, 2, s), e(0)}));
    }
    return finish(std::move(set));
}

StateSet build_g3() {
    return build_g_impl(2, {"A", "B", "C"}, "G3");
}

StateSet build_g_general(size_t m) {
    if (m == 0) {
        throw std::invalid_argument("G_{m+1} needs m >= 1");
    }
    std::vector<std::string> names{"A"};
    for (size_t k = 1; k <= m; k++) {
        names.push_back("B" + std::to_string(k));
    }
    return build_g_impl(m, names, "G" + std::to_string(m + 1));
}

StateSet build_sg5() {
    PartyLayout layout = labelled_layout({{"A", {"a", "b", "c", "d", "e"}}, {"B", {"a", "b", "c", "d", "e"}}});
    enum : size_t { a, b, c, d, e };
    auto ket = [](size_t k) { return basis_vector(5, k); };
    StateSet set{"S_g5", layout, {}, "nonlocal product set with layered tiles (published construction); recorded claim"};
    auto add = [&](std::string label, std::vector<CScalar> x, std::vector<CScalar> y) {
        set.members.push_back(product_member<CScalar>(layout, std::move(label), {std::move(x), std::move(y)}));
    };
    for (int s : {1, -1}) add("Gamma1" + sign_char(s), ket(a), pair_superposition(5, a, b, s));
    for (int s : {1, -1}) add("Gamma2" + sign_char(s), pair_superposition(5, a, b, s), ket(c));
    for (int s : {1, -1}) add("Gamma3" + sign_char(s), ket(c), pair_superposition(5, b, c, s));
    for (int s : {1, -1}) add("Gamma4" + sign_char(s), pair_superposition(5, b, c, s), ket(a));
    for (auto t : QuadSuperposition::sign_triples()) {
        QuadSuperposition u{{a, b, c, d}, t};
        add("Gamma5" + u.suffix(), ket(d), u.vector(5));
    }
    for (auto t : QuadSuperposition::sign_triples()) {
        QuadSuperposition u{{a, b, c, d}, t};
        add("Gamma6" + u.suffix(), u.vector(5), ket(e));
    }
    for (auto t : QuadSuperposition::sign_triples()) {
        QuadSuperposition v{{a, b, c, e}, t};
        add("Gamma7" + v.suffix(), ket(e), v.vector(5));
    }
    for (auto t : QuadSuperposition::sign_triples()) {
        QuadSuperposition v{{a, b, c, e}, t};
        add("Gamma8" + v.suffix(), v.vector(5), ket(d));
    }
    return finish(std::move(set));
}

StateSet build_sigma() {
    // Bob-2's levels are labelled 1..5 and stored at indices 0..4.
    PartyLayout layout = labelled_layout({{"A", numeric_labels(0, 6)}, {"B1", numeric_labels(0, 5)}, {"B2", numeric_labels(1, 5)}});
    auto a = [](size_t k) { return basis_vector(6, k); };
    auto b1 = [](size_t k) { return basis_vector(5, k); };
    auto b2 = [](size_t label) { return basis_vector(5, label - 1); };
    auto alpha = [](size_t dim, size_t shift, int s) { return pair_superposition(dim, 1 - shift, 2 - shift, s); };
    auto beta = [](size_t dim, int s) { return pair_superposition(dim, 2, 3, s); };
    auto gamma = [](size_t dim, size_t shift, int s) { return pair_superposition(dim, 2 - shift, 4 - shift, s); };

    StateSet set{"Sigma", layout, {}, "genuinely nonlocal product set (published construction); recorded claim"};
    auto add = [&](std::string label, std::vector<CScalar> x, std::vector<CScalar> y, std::vector<CScalar> z) {
        set.members.push_back(product_member<CScalar>(layout, std::move(label), {std::move(x), std::move(y), std::move(z)}));
    };
    for (int s : {1, -1}) add("Omega1" + sign_char(s), a(1), alpha(5, 0, s), b2(4));
    for (int s : {1, -1}) add("Omega2" + sign_char(s), alpha(6, 0, s), b1(3), b2(4));
    for (int s : {1, -1}) add("Omega3" + sign_char(s), a(3), beta(5, s), b2(4));
    for (int s : {1, -1}) add("Omega4" + sign_char(s), beta(6, s), b1(1), b2(4));
    for (int s : {1, -1}) add("Omega5" + sign_char(s), a(4), b1(3), gamma(5, 1, s));
    for (int s : {1, -1}) add("Omega6" + sign_char(s), gamma(6, 0, s), b1(3), b2(1));
    for (int s : {1, -1}) add("Omega7" + sign_char(s), a(1), b1(3), alpha(5, 1, s));
    auto quads = QuadSuperposition::sign_triples();
    for (auto t : quads) {
        QuadSuperposition psi{{0, 1, 2, 3}, t};
        add("Omega8" + psi.suffix(), a(0), psi.vector(5), b2(3));
    }
    for (auto t : quads) {
        QuadSuperposition psi{{0, 1, 2, 3}, t};
        add("Omega9" + psi.suffix(), psi.vector(6), b1(4), b2(3));
    }
    for (auto t : quads) {
        QuadSuperposition phi{{1, 2, 3, 4}, t};
        add("Omega10" + phi.suffix(), a(4), phi.vector(5), b2(3));
    }
    for (auto t : quads) {
        QuadSuperposition phi{{1, 2, 3, 4}, t};
        add("Omega11" + phi.suffix(), phi.vector(6), b1(0), b2(3));
    }
    for (auto t : quads) {
        QuadSuperposition phi_b2{{0, 1, 2, 3}, t};  // labels 1..4
        add("Omega12" + phi_b2.suffix(), a(5), b1(0), phi_b2.vector(5));
    }
    for (auto t : quads) {
        QuadSuperposition ups{{1, 2, 4, 5}, t};
        add("Omega13" + ups.suffix(), ups.vector(6), b1(0), b2(5));
    }
    for (auto t : quads) {
        QuadSuperposition ups_b2{{0, 1, 3, 4}, t};  // labels 1, 2, 4, 5
        add("Omega14" + ups_b2.suffix(), a(3), b1(0), ups_b2.vector(5));
    }
    return finish(std::move(set));
}

namespace {

struct HRow {
    // Each slot is a basis level, or -1 for eta (levels 0,1) / -2 for kappa (levels 0,2).
    int x, y, z;
};

std::vector<CScalar> h_local(int slot, int s) {
    if (slot == -1) {
        return pair_superposition(3, 0, 1, s);
    }
    if (slot == -2) {
        return pair_superposition(3, 0, 2, s);
    }
    return basis_vector(3, static_cast<size_t>(slot));
}

std::string h_name(int slot, int s) {
    if (slot == -1) {
        return "eta" + sign_char(s);
    }
    if (slot == -2) {
        return "kappa" + sign_char(s);
    }
    return std::to_string(slot);
}

StateSet build_h_rows(const std::vector<HRow> &rows, const std::vector<size_t> &diagonal, std::string name) {
    PartyLayout layout = labelled_layout({{"A", {"0", "1", "2"}}, {"B", {"0", "1", "2"}}, {"C", {"0", "1", "2"}}});
    StateSet set{std::move(name), layout, {}, "genuinely nonlocal product basis with strong nonlocality (published); recorded claim"};
    for (const auto &r : rows) {
        for (int s : {1, -1}) {
            std::string label = h_name(r.x, s) + "," + h_name(r.y, s) + "," + h_name(r.z, s);
            set.members.push_back(product_member<CScalar>(layout, label, {h_local(r.x, s), h_local(r.y, s), h_local(r.z, s)}));
        }
    }
    for (size_t k : diagonal) {
        std::string d = std::to_string(k);
        set.members.push_back(product_member<CScalar>(layout, d + "," + d + "," + d, {basis_vector(3, k), basis_vector(3, k), basis_vector(3, k)}));
    }
    return finish(std::move(set));
}

}  // namespace

StateSet build_h() {
    return build_h_rows({{0, 1, -1}, {1, -1, 0}, {-1, 0, 1},
                         {0, 2, -2}, {2, -2, 0}, {-2, 0, 2},
                         {1, 2, -1}, {2, -1, 1}, {-1, 1, 2},
                         {2, 1, -2}, {1, -2, 2}, {-2, 2, 1}},
                        {0, 1, 2}, "H");
}

StateSet build_h_prime() {
    return build_h_rows({{0, 1, -1}, {1, -1, 0}, {-1, 0, 1}}, {0, 1}, "H_prime");
}

StateSet restrict_members(const StateSet &set, const std::vector<std::string> &labels, std::string name) {
    StateSet out{std::move(name), set.layout, {}, set.status_note};
    for (const auto &l : labels) {
        out.members.push_back(set.member(l));
    }
    return finish(std::move(out));
}

StateSet union_orthogonal(const StateSet &s, const StateSet &t) {
    if (!s.layout.same_shape(t.layout)) {
        throw InvariantError("union of sets with different layouts");
    }
    StateSet probe{s.name + "+" + t.name, s.layout, {}, ""};
    for (const auto &x : s.members) {
        for (const auto &y : t.members) {
            probe.members = {x, y};
            if (!non_orthogonal_pairs(probe).empty()) {
                throw InvariantError("union: '" + x.label + "' (from " + s.name + ") and '" + y.label + "' (from " +
                                     t.name + ") are not orthogonal");
            }
        }
    }
    StateSet out{s.name + "+" + t.name, s.layout, s.members, s.status_note};
    for (const auto &y : t.members) {
        out.members.push_back(y);
    }
    return finish(std::move(out));
}

namespace {

/// Appends one fixed factor; returns the index of the party that took it.
StateSet append_one(const StateSet &s, const FixedFactor &f, size_t &holder_out, bool &is_new) {
    if (f.state.empty()) {
        throw InvariantError("fixed factor '" + f.name + "' is empty");
    }
    std::vector<Party> parties = s.layout.parties();
    is_new = !s.layout.contains(f.holder);
    if (is_new) {
        holder_out = parties.size();
        parties.push_back(Party{f.holder, f.state.size(), {}, {}});
    } else {
        holder_out = s.layout.index_of(f.holder);
        parties[holder_out].dim *= f.state.size();
        parties[holder_out].labels.clear();
    }
    PartyLayout layout(std::move(parties));
    StateSet out{s.name + "+" + f.name, layout, {}, s.status_note};
    for (const auto &m : s.members) {
        if (!m.is_product()) {
            throw InvariantError("append_fixed_local needs product members");
        }
        auto locals = m.locals;
        if (is_new) {
            locals.push_back(f.state);
        } else {
            std::vector<CScalar> merged;
            for (const auto &x : locals[holder_out]) {
                for (const auto &y : f.state) {
                    merged.push_back(x * y);
                }
            }
            locals[holder_out] = std::move(merged);
        }
        out.members.push_back(product_member<CScalar>(layout, m.label, std::move(locals)));
    }
    return out;
}

}  // namespace

StateSet append_fixed_local(const StateSet &s, const std::vector<FixedFactor> &fixed) {
    StateSet cur = s;
    for (const auto &f : fixed) {
        size_t holder = 0;
        bool is_new = false;
        cur = append_one(cur, f, holder, is_new);
    }
    return finish(std::move(cur));
}

StateSet contract_fixed_local(const StateSet &appended, const PartyLayout &original,
                              const std::vector<FixedFactor> &fixed) {
    StateSet cur = appended;
    for (size_t n = fixed.size(); n-- > 0;) {
        const auto &f = fixed[n];
        size_t df = f.state.size();
        std::vector<Party> parties = cur.layout.parties();
        size_t p = cur.layout.index_of(f.holder);
        bool drop = !original.contains(f.holder);
        if (drop) {
            parties.erase(parties.begin() + static_cast<std::ptrdiff_t>(p));
        } else {
            if (parties[p].dim % df != 0) {
                throw InvariantError("fixed factor '" + f.name + "' does not divide party '" + f.holder + "'");
            }
            parties[p].dim /= df;
        }
        PartyLayout layout(std::move(parties));
        StateSet next{cur.name, layout, {}, cur.status_note};
        for (const auto &m : cur.members) {
            if (!m.is_product()) {
                throw InvariantError("contract_fixed_local needs product members");
            }
            auto locals = m.locals;
            const std::vector<CScalar> &local = locals[p];
            std::vector<CScalar> reduced(local.size() / df);
            for (size_t x = 0; x < reduced.size(); x++) {
                for (size_t c = 0; c < df; c++) {
                    reduced[x] += f.state[c].conj() * local[x * df + c];
                }
            }
            if (drop) {
                // The removed party leaves a scalar overlap behind.
                locals.erase(locals.begin() + static_cast<std::ptrdiff_t>(p));
                for (auto &x : locals.at(0)) {
                    x *= reduced.at(0);
                }
            } else {
                locals[p] = std::move(reduced);
            }
            next.members.push_back(product_member<CScalar>(layout, m.label, std::move(locals)));
        }
        cur = std::move(next);
    }
    if (!cur.layout.same_shape(original)) {
        throw InvariantError("contracted layout does not match the original");
    }
    StateSet out{appended.name, original, {}, appended.status_note};
    for (auto &m : cur.members) {
        out.members.push_back(product_member<CScalar>(original, m.label, m.locals));
    }
    return out;
}

const std::vector<CatalogEntry> &set_catalog() {
    static const std::vector<CatalogEntry> entries{
        {"s_ben", "8 domino states in C3 x C3", false},
        {"g3", "14 states in C4 x C3 x C3", false},
        {"g", "G_{m+1}: 6m+2 states in C^(m+2) x (C3)^m (needs --m)", true},
        {"sg5", "24 layered-tile states in C5 x C5", false},
        {"sigma", "42 states in C6 x C5 x C5", false},
        {"h", "27-state product basis of (C3)^3", false},
        {"h_prime", "8-state subset of h on qubit levels", false},
    };
    return entries;
}

StateSet build_catalog_set(std::string_view name, size_t m) {
    if (name == "s_ben") return build_s_ben();
    if (name == "g3") return build_g3();
    if (name == "g") return build_g_general(m);
    if (name == "sg5") return build_sg5();
    if (name == "sigma") return build_sigma();
    if (name == "h") return build_h();
    if (name == "h_prime") return build_h_prime();
    throw std::invalid_argument("unknown catalog set '" + std::string(name) + "'");
}

}  // namespace gnps
