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

#include "gnps/layout.h"

#include <set>

namespace gnps {

size_t Party::ancilla_dim() const {
    size_t d = 1;
    for (size_t a : ancilla) {
        d *= a;
    }
    return d;
}

PartyLayout::PartyLayout(std::vector<Party> parties) : parties_(std::move(parties)) {
    std::set<std::string> names;
    for (const auto &p : parties_) {
        if (p.name.empty()) {
            throw LayoutError("party name must not be empty");
        }
        if (!names.insert(p.name).second) {
            throw LayoutError("duplicate party name '" + p.name + "'");
        }
        if (p.dim == 0) {
            throw LayoutError("party '" + p.name + "' has zero dimension");
        }
        for (size_t a : p.ancilla) {
            if (a == 0) {
                throw LayoutError("party '" + p.name + "' has a zero-dimensional ancilla");
            }
        }
        if (!p.labels.empty() && p.labels.size() != p.dim) {
            throw LayoutError("party '" + p.name + "' label count does not match its dimension");
        }
    }
    size_t n = parties_.size();
    sys_strides_.assign(n, 1);
    anc_strides_.assign(n, 1);
    for (size_t k = n; k-- > 0;) {
        sys_strides_[k] = system_dim_;
        system_dim_ *= parties_[k].dim;
        anc_strides_[k] = ancilla_dim_;
        ancilla_dim_ *= parties_[k].ancilla_dim();
    }
}

PartyLayout PartyLayout::systems(const std::vector<std::pair<std::string, size_t>> &parties) {
    std::vector<Party> out;
    for (const auto &[name, dim] : parties) {
        out.push_back(Party{name, dim, {}, {}});
    }
    return PartyLayout(std::move(out));
}

size_t PartyLayout::index_of(std::string_view name) const {
    for (size_t k = 0; k < parties_.size(); k++) {
        if (parties_[k].name == name) {
            return k;
        }
    }
    throw LayoutError("unknown party '" + std::string(name) + "'");
}

bool PartyLayout::contains(std::string_view name) const {
    for (const auto &p : parties_) {
        if (p.name == name) {
            return true;
        }
    }
    return false;
}

PartyLayout PartyLayout::with_ancillas(const std::vector<std::vector<size_t>> &ancillas) const {
    if (ancillas.size() != parties_.size()) {
        throw LayoutError("ancilla shape list must have one entry per party");
    }
    std::vector<Party> out = parties_;
    for (size_t k = 0; k < out.size(); k++) {
        out[k].ancilla = ancillas[k];
    }
    return PartyLayout(std::move(out));
}

PartyLayout PartyLayout::without_ancillas() const {
    return with_ancillas(std::vector<std::vector<size_t>>(parties_.size()));
}

bool PartyLayout::same_shape(const PartyLayout &o) const {
    if (parties_.size() != o.parties_.size()) {
        return false;
    }
    for (size_t k = 0; k < parties_.size(); k++) {
        const auto &a = parties_[k];
        const auto &b = o.parties_[k];
        if (a.name != b.name || a.dim != b.dim || a.ancilla_dim() != b.ancilla_dim()) {
            return false;
        }
    }
    return true;
}

}  // namespace gnps
