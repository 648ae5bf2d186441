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


#include "gnps/oplm.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gnps/linalg.h"

namespace gnps {

std::string Cut::str() const {
    std::string s;
    for (const auto &p : group) {
        s += s.empty() ? p : "," + p;
    }
    return s;
}

CutMode parse_cut_mode(const std::string &text) {
    if (text == "singles") return CutMode::singles;
    if (text == "leave-one-out") return CutMode::leave_one_out;
    if (text == "standard") return CutMode::standard;
    if (text == "all") return CutMode::all;
    throw std::invalid_argument("unknown cut mode '" + text + "'");
}

std::vector<Cut> enumerate_cuts(const PartyLayout &layout, CutMode mode) {
    size_t n = layout.size();
    if (n < 2) {
        throw LayoutError("cuts need at least two parties");
    }
    std::vector<uint64_t> masks;
    uint64_t full = (uint64_t{1} << n) - 1;
    auto add = [&](uint64_t m) {
        if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
            masks.push_back(m);
        }
    };
    if (mode == CutMode::singles || mode == CutMode::standard) {
        for (size_t p = 0; p < n; p++) {
            add(uint64_t{1} << p);
        }
    }
    if (mode == CutMode::leave_one_out || mode == CutMode::standard) {
        for (size_t p = 0; p < n; p++) {
            add(full & ~(uint64_t{1} << p));
        }
    }
    if (mode == CutMode::all) {
        for (uint64_t m = 1; m < full; m++) {
            add(m);
        }
    }
    std::vector<Cut> cuts;
    for (uint64_t m : masks) {
        Cut c;
        for (size_t p = 0; p < n; p++) {
            if (m >> p & 1) {
                c.group.push_back(layout.party(p).name);
            }
        }
        cuts.push_back(std::move(c));
    }
    return cuts;
}

bool IrreducibilityReport::all_trivial() const {
    return std::all_of(cuts.begin(), cuts.end(), [](const CutResult &c) { return c.trivial; });
}

std::vector<QScalar> hermitian_coordinates(const ExactMatrix &e) {
    size_t d = e.rows();
    std::vector<QScalar> x;
    for (size_t k = 0; k < d; k++) {
        x.push_back(e(k, k).re());
    }
    for (size_t k = 0; k < d; k++) {
        for (size_t l = k + 1; l < d; l++) {
            x.push_back(e(k, l).re());
            x.push_back(e(k, l).im());
        }
    }
    return x;
}

ExactMatrix hermitian_from_coordinates(const std::vector<QScalar> &x, size_t d) {
    if (x.size() != d * d) {
        throw DimensionError("Hermitian coordinates need d^2 entries");
    }
    ExactMatrix e(d, d);
    size_t pos = 0;
    for (size_t k = 0; k < d; k++) {
        e(k, k) = CScalar(x[pos++]);
    }
    for (size_t k = 0; k < d; k++) {
        for (size_t l = k + 1; l < d; l++) {
            CScalar v(x[pos], x[pos + 1]);
            pos += 2;
            e(k, l) = v;
            e(l, k) = v.conj();
        }
    }
    return e;
}

namespace {

/// Position of the (Re, Im) pair of entry (k, l), k < l.
size_t offdiag_index(size_t d, size_t k, size_t l) {
    // Pairs before row k: sum_{r<k} (d - 1 - r).
    size_t before = k * (d - 1) - k * (k - 1) / 2;
    return d + 2 * (before + (l - k - 1));
}

}  // namespace

CutResult oplm_space(const StateSet &set, const Cut &cut) {
    const PartyLayout &layout = set.layout;
    if (layout.has_ancilla()) {
        throw LayoutError("irreducibility check expects a system-only layout");
    }
    std::vector<bool> in_group(layout.size(), false);
    for (const auto &name : cut.group) {
        in_group[layout.index_of(name)] = true;
    }
    size_t members_in_group = std::count(in_group.begin(), in_group.end(), true);
    if (members_in_group == 0 || members_in_group != cut.group.size()) {
        throw LayoutError("cut group must be a nonempty set of distinct parties");
    }
    size_t d = 1;
    for (size_t p = 0; p < layout.size(); p++) {
        if (in_group[p]) {
            d *= layout.party(p).dim;
        }
    }
    // Split every member into (group index k, rest index r) -> amplitude,
    // bucketed by r.
    using Entries = std::map<size_t, std::vector<std::pair<size_t, CScalar>>>;
    std::vector<Entries> split(set.members.size());
    for (size_t m = 0; m < set.members.size(); m++) {
        const auto &amps = set.members[m].ket.amplitudes;
        for (size_t g = 0; g < amps.size(); g++) {
            if (amps[g].is_zero()) {
                continue;
            }
            size_t k = 0;
            size_t r = 0;
            for (size_t p = 0; p < layout.size(); p++) {
                size_t digit = layout.system_digit(g, p);
                if (in_group[p]) {
                    k = k * layout.party(p).dim + digit;
                } else {
                    r = r * layout.party(p).dim + digit;
                }
            }
            split[m][r].emplace_back(k, amps[g]);
        }
    }

    size_t unknowns = d * d;
    Eliminator<QScalar> elim(unknowns);
    std::vector<SparseRow<QScalar>> rows;
    for (size_t i = 0; i < split.size(); i++) {
        for (size_t j = i + 1; j < split.size(); j++) {
            // C[k][l] = sum_r conj(psi_i[k, r]) psi_j[l, r].
            std::map<std::pair<size_t, size_t>, CScalar> c;
            for (const auto &[r, xs] : split[i]) {
                auto it = split[j].find(r);
                if (it == split[j].end()) {
                    continue;
                }
                for (const auto &[k, x] : xs) {
                    CScalar cx = x.conj();
                    for (const auto &[l, y] : it->second) {
                        c[{k, l}] += cx * y;
                    }
                }
            }
            std::map<uint32_t, QScalar> re;
            std::map<uint32_t, QScalar> im;
            for (const auto &[kl, v] : c) {
                auto [k, l] = kl;
                if (v.is_zero()) {
                    continue;
                }
                if (k == l) {
                    re[static_cast<uint32_t>(k)] += v.re();
                    im[static_cast<uint32_t>(k)] += v.im();
                    continue;
                }
                // E[k][l] = y + iz and E[l][k] = y - iz for k < l.
                size_t a = std::min(k, l);
                size_t b = std::max(k, l);
                auto col = static_cast<uint32_t>(offdiag_index(d, a, b));
                QScalar sign = k < l ? QScalar(1) : QScalar(-1);
                // Contribution v * (y + sign * i z).
                re[col] += v.re();
                im[col] += v.im();
                re[col + 1] -= sign * v.im();
                im[col + 1] += sign * v.re();
            }
            for (auto *part : {&re, &im}) {
                SparseRow<QScalar> row;
                for (auto &[col, val] : *part) {
                    if (!val.is_zero()) {
                        row.emplace_back(col, val);
                    }
                }
                if (!row.empty()) {
                    rows.push_back(row);
                    elim.add_row(std::move(row));
                }
            }
        }
    }

    CutResult out;
    out.cut = cut;
    out.group_dim = d;
    out.rank = elim.rank();
    auto basis = elim.null_space();
    out.dimension = basis.size();
    out.trivial = out.dimension == 1;

    std::vector<QScalar> identity(unknowns);
    for (size_t k = 0; k < d; k++) {
        identity[k] = QScalar(1);
    }
    out.identity_in_span = std::all_of(rows.begin(), rows.end(), [&](const SparseRow<QScalar> &row) {
        QScalar acc;
        for (const auto &[col, val] : row) {
            acc += val * identity[col];
        }
        return acc.is_zero();
    });

    for (const auto &v : basis) {
        out.basis.push_back(hermitian_from_coordinates(v, d));
    }
    if (!out.trivial) {
        for (const auto &e : out.basis) {
            // Not a multiple of I: some off-diagonal entry or unequal diagonal.
            bool scalar = true;
            for (size_t k = 0; k < d && scalar; k++) {
                for (size_t l = 0; l < d && scalar; l++) {
                    if (k != l ? !e(k, l).is_zero() : e(k, k) != e(0, 0)) {
                        scalar = false;
                    }
                }
            }
            if (!scalar) {
                out.witness = e;
                break;
            }
        }
    }
    return out;
}

IrreducibilityReport gnps_evidence(const StateSet &set, CutMode mode) {
    IrreducibilityReport r;
    r.set = set.name;
    for (const auto &cut : enumerate_cuts(set.layout, mode)) {
        r.cuts.push_back(oplm_space(set, cut));
    }
    return r;
}

}  // namespace gnps
